#pragma once

// Structured report documents for the command-line front end: JSON
// serialization with exact rationals and a plain-text table renderer.

#include "sl2flip/git.hpp"
#include "sl2flip/sl2core.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace sl2flip::report {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

/// A request the library understands but deliberately does not serve.
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  core::SL2Params params;
  json sections = json::object();
  std::vector<std::string> warnings;

  friend bool operator==(const ReportDocument& x, const ReportDocument& y);
};

json to_json(const ReportDocument& doc);
ReportDocument from_json(const json& j);

json rational_json(const lattice::Rational& r);
lattice::Rational rational_from_json(const json& j);

enum class SemigroupKind { kPlus, kMinus, kPrime, kTilde };
SemigroupKind parse_semigroup_kind(const std::string& name);

/// "plus", "minus", "trivial" or "w,c" (torus weight, residue mod a).
git::GroupCharacter parse_character(const std::string& text, const core::SL2Params& P);

ReportDocument info_document(const core::SL2Params& P, const git::SearchBudget& budget);
ReportDocument hilbert_document(const core::SL2Params& P, SemigroupKind kind, bool basis_requested);
ReportDocument git_document(const core::SL2Params& P, const std::string& character, const git::SearchBudget& budget);
ReportDocument flip_document(const core::SL2Params& P, const git::SearchBudget& budget);
ReportDocument cones_document(const core::SL2Params& P);
ReportDocument degeneration_document(const core::SL2Params& P);

/// Aligned key/value tables, one block per section.
std::string render_text(const ReportDocument& doc);

}  // namespace sl2flip::report
