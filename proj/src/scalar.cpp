#include "fpoisson/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace fpoisson {

std::string to_string(const Scalar& value)
{
    return value.get_str();
}

Scalar parse_scalar(std::string_view text)
{
    std::string cleaned;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
    if (cleaned.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t start = (cleaned[0] == '-' || cleaned[0] == '+') ? 1 : 0;
    auto slash = cleaned.find('/');
    auto digits_ok = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(cleaned[i]))) return false;
        return true;
    };
    bool ok = slash == std::string::npos ? digits_ok(start, cleaned.size())
                                         : digits_ok(start, slash) && digits_ok(slash + 1, cleaned.size());
    if (!ok) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    if (cleaned[0] == '+') cleaned.erase(0, 1);
    Scalar value;
    if (value.set_str(cleaned, 10) != 0) throw std::invalid_argument("malformed rational literal");
    if (slash != std::string::npos && value.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value.canonicalize();
    return value;
}

} // namespace fpoisson
