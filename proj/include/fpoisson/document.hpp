#pragma once

#include "fpoisson/automorphism.hpp"
#include "fpoisson/certificate.hpp"
#include "fpoisson/cenv.hpp"
#include "fpoisson/envelope.hpp"
#include "fpoisson/witness.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fpoisson {

enum class DocumentKind { Element, Endomorphism, TameWord, EnvElement, CEnvElement, Matrix, Report };

std::string kind_name(DocumentKind kind);
std::optional<DocumentKind> kind_from_name(std::string_view name);

struct Document {
    using Payload =
        std::variant<PoissonElement, Endomorphism, TameWord, EnvElement, CEnvElement, CEnvMatrix, nlohmann::json>;

    DocumentKind kind;
    Payload payload;

    static Document of(PoissonElement e) { return {DocumentKind::Element, std::move(e)}; }
    static Document of(Endomorphism e) { return {DocumentKind::Endomorphism, std::move(e)}; }
    static Document of(TameWord w) { return {DocumentKind::TameWord, std::move(w)}; }
    static Document of(EnvElement e) { return {DocumentKind::EnvElement, std::move(e)}; }
    static Document of(CEnvElement e) { return {DocumentKind::CEnvElement, std::move(e)}; }
    static Document of(CEnvMatrix m) { return {DocumentKind::Matrix, std::move(m)}; }
    static Document report(nlohmann::json j) { return {DocumentKind::Report, std::move(j)}; }

    friend bool operator==(const Document&, const Document&) = default;
};

/// What the text of a document does not record: the arity of Poisson-side
/// kinds and the generator labels of envelope-polynomial kinds.
struct Ring {
    int arity = 3;
    std::vector<int> generators{1, 2, 3};
};

/// Human-readable canonical text; deterministic and injective per kind.
std::string print_canonical(const Document& d);
/// Inverse of print_canonical for the given kind and ring.
Document parse_document(DocumentKind kind, std::string_view text, const Ring& ring = {});

/// Machine-readable form.  Object keys are sorted, so dump() is canonical.
nlohmann::json to_json(const Document& d);
Document from_json(const nlohmann::json& j);
std::string print_structured(const Document& d);

nlohmann::json report_json(const VerificationReport& r);
nlohmann::json report_json(const CertificateReport& r);

} // namespace fpoisson
