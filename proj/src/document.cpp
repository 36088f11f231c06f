#include "fpoisson/document.hpp"

#include "fpoisson/expr.hpp"

#include <array>

namespace fpoisson {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<DocumentKind, std::string_view>, 7> kNames{{
    {DocumentKind::Element, "element"},
    {DocumentKind::Endomorphism, "endomorphism"},
    {DocumentKind::TameWord, "tame-word"},
    {DocumentKind::EnvElement, "env-element"},
    {DocumentKind::CEnvElement, "cenv-element"},
    {DocumentKind::Matrix, "matrix"},
    {DocumentKind::Report, "report"},
}};

json element_json(const PoissonElement& e)
{
    json terms = json::array();
    for (const auto& [m, c] : e.terms()) {
        json factors = json::array();
        for (const auto& w : m.factors()) factors.push_back(to_text(w));
        terms.push_back({{"coefficient", to_string(c)}, {"factors", factors}});
    }
    return {{"arity", e.arity()}, {"text", to_text(e)}, {"terms", terms}};
}

json cenv_json(const CEnvElement& e)
{
    const std::size_t k = e.generators().size();
    json terms = json::array();
    for (const auto& [exps, c] : e.terms()) {
        std::vector<int> m(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(k));
        std::vector<int> h(exps.begin() + static_cast<std::ptrdiff_t>(k), exps.end());
        terms.push_back({{"coefficient", to_string(c)}, {"m", m}, {"h", h}});
    }
    return {{"generators", e.generators()}, {"text", to_text(e)}, {"terms", terms}};
}

json matrix_json(const CEnvMatrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_text(m(r, c)));
        rows.push_back(row);
    }
    return {{"generators", m.generators()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json endo_json(const Endomorphism& phi)
{
    json images = json::array();
    for (const auto& f : phi.images()) images.push_back(to_text(f));
    return {{"arity", phi.arity()}, {"images", images}};
}

json word_json(const TameWord& w)
{
    json factors = json::array();
    for (const auto& s : w.factors())
        factors.push_back({{"index", s.index()}, {"alpha", to_string(s.alpha())}, {"f", to_text(s.f())}});
    return {{"arity", w.arity()}, {"factors", factors}};
}

json env_json(const EnvElement& e)
{
    json terms = json::array();
    for (const auto& [w, a] : e.terms()) terms.push_back({{"coefficient", to_text(a)}, {"h_word", w.letters()}});
    return {{"arity", e.arity()}, {"text", to_text(e)}, {"terms", terms}};
}

std::string matrix_rows_text(const json& entries)
{
    std::string text;
    for (const auto& row : entries) {
        if (!text.empty()) text += "\n";
        text += "[";
        for (std::size_t c = 0; c < row.size(); ++c) text += (c ? ", " : "") + row[c].get<std::string>();
        text += "]";
    }
    return text;
}

} // namespace

std::string kind_name(DocumentKind kind)
{
    for (const auto& [k, name] : kNames)
        if (k == kind) return std::string(name);
    throw std::logic_error("unknown document kind");
}

std::optional<DocumentKind> kind_from_name(std::string_view name)
{
    for (const auto& [k, n] : kNames)
        if (n == name) return k;
    return std::nullopt;
}

std::string print_canonical(const Document& d)
{
    return std::visit(
        [](const auto& value) -> std::string {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, json>)
                return value.dump(2);
            else
                return to_text(value);
        },
        d.payload);
}

Document parse_document(DocumentKind kind, std::string_view text, const Ring& ring)
{
    switch (kind) {
    case DocumentKind::Element:
        return Document::of(parse_element(text, ring.arity));
    case DocumentKind::Endomorphism:
        return Document::of(parse_endomorphism(text));
    case DocumentKind::TameWord:
        return Document::of(parse_tame_word(text, ring.arity));
    case DocumentKind::EnvElement:
        return Document::of(parse_env(text, ring.arity));
    case DocumentKind::CEnvElement:
        return Document::of(parse_cenv(text, ring.generators));
    case DocumentKind::Matrix:
        return Document::of(parse_matrix(text, ring.generators));
    case DocumentKind::Report:
        try {
            return Document::report(json::parse(text));
        } catch (const json::parse_error& e) {
            throw ParseError(e.what(), 1, static_cast<int>(e.byte));
        }
    }
    throw std::logic_error("unknown document kind");
}

json to_json(const Document& d)
{
    json body = std::visit(
        [](const auto& value) -> json {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, PoissonElement>) return element_json(value);
            else if constexpr (std::is_same_v<T, Endomorphism>) return endo_json(value);
            else if constexpr (std::is_same_v<T, TameWord>) return word_json(value);
            else if constexpr (std::is_same_v<T, EnvElement>) return env_json(value);
            else if constexpr (std::is_same_v<T, CEnvElement>) return cenv_json(value);
            else if constexpr (std::is_same_v<T, CEnvMatrix>) return matrix_json(value);
            else return value;
        },
        d.payload);
    if (d.kind == DocumentKind::Report) return body;
    body["kind"] = kind_name(d.kind);
    return body;
}

Document from_json(const json& j)
{
    const auto kind = j.is_object() && j.contains("kind") ? kind_from_name(j["kind"].get<std::string>()) : std::nullopt;
    if (!kind) return Document::report(j);
    Ring ring;
    if (j.contains("arity")) ring.arity = j["arity"].get<int>();
    if (j.contains("generators")) ring.generators = j["generators"].get<std::vector<int>>();
    switch (*kind) {
    case DocumentKind::Endomorphism: {
        std::string text;
        for (std::size_t i = 0; i < j["images"].size(); ++i)
            text += "x" + std::to_string(i + 1) + " -> " + j["images"][i].get<std::string>() + "\n";
        return parse_document(*kind, text, ring);
    }
    case DocumentKind::TameWord: {
        std::string text;
        for (const auto& f : j["factors"])
            text += "sigma(" + std::to_string(f["index"].get<int>()) + ", " + f["alpha"].get<std::string>() + ", " +
                    f["f"].get<std::string>() + ")\n";
        return parse_document(*kind, text, ring);
    }
    case DocumentKind::Matrix:
        return parse_document(*kind, matrix_rows_text(j["entries"]), ring);
    default:
        return parse_document(*kind, j["text"].get<std::string>(), ring);
    }
}

std::string print_structured(const Document& d)
{
    return to_json(d).dump(2);
}

json report_json(const VerificationReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"name", r.name}, {"passed", r.passed()}, {"checks", checks}, {"log", r.log}};
}

json report_json(const CertificateReport& r)
{
    json steps = json::array();
    for (const auto& s : r.steps) steps.push_back({{"id", s.id}, {"level", s.level}, {"ok", s.ok}, {"detail", s.detail}});
    json word = nullptr;
    if (r.word) {
        word = json::array();
        for (const auto& f : r.word->factors())
            word.push_back({{"kind", f.kind == E2Factor::Kind::Lower ? "lower" : "upper"}, {"entry", to_text(f.entry)}});
    }
    return {
        {"status", r.verified() ? "verified" : "step-failed"},
        {"failed_step", r.failed_step},
        {"failed_level", r.failed_level},
        {"conjugate", endo_json(r.conjugate)},
        {"target", matrix_json(r.target)},
        {"word", word},
        {"residual", r.residual ? matrix_json(*r.residual) : json(nullptr)},
        {"steps", steps},
    };
}

} // namespace fpoisson
