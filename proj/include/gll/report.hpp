#pragma once

// Report builders behind the gllcalc subcommands. Every function is pure and
// returns its report as a value; the tool only handles flags, files and exit
// codes.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gll/gf.hpp"
#include "gll/hyper.hpp"
#include "gll/poly.hpp"
#include "gll/sgp.hpp"

namespace gll::cli {

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitMismatch = 3;

nlohmann::json elem_json(const gf::FieldCtx& k, gf::FieldElem a);
nlohmann::json field_json(const gf::FieldCtx& k);
/// {"text": ..., "terms": [{"x": i, "y": j, "coeff": [coords]}, ...]}
nlohmann::json poly_json(const poly::BiPoly& f);

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  unsigned max_t = 2;
  bool exact = false;
  unsigned max_g = 0;  // 0: e + 3
  std::uint64_t budget = std::uint64_t{1} << 24;
};

nlohmann::json analyze(const poly::BiPoly& f, const AnalyzeOptions& opts);

// ---------------------------------------------------------------------------
// semigroup

/// `oracle` recomputes ggl by direct search and cross-checks the formula.
nlohmann::json semigroup_report(const std::vector<std::uint64_t>& gens, bool oracle);

// ---------------------------------------------------------------------------
// scan: homogeneous forms of degree e over GF(q) up to GL_2(k) and scalars

struct ScanRow {
  poly::BiPoly f;  // least coefficient code in its orbit
  std::uint64_t orbit_size;
  unsigned index;
  unsigned lower;
  std::optional<unsigned> upper;
  bool exact;
  std::optional<unsigned> gap;  // gll - index when exact
  std::optional<poly::BiPoly> witness;
};

struct ScanOptions {
  unsigned max_g = 0;  // exhaustive search up to this level when bounds differ
  unsigned max_t = 2;
  std::uint64_t budget = std::uint64_t{1} << 24;
  /// Upper limit on q^(e+1), the number of coefficient vectors visited.
  std::uint64_t max_forms = std::uint64_t{1} << 22;
};

/// Representative of the GL_2 orbit of the form f (up to scalars): the
/// member with the least coefficient code. Throws InvalidArgument for a
/// non-form.
poly::BiPoly canonical_form(const poly::BiPoly& f);

/// One row per orbit, sorted by representative code. Throws InvalidArgument
/// when e = 0 or the form space exceeds max_forms.
std::vector<ScanRow> scan_forms(const gf::Field& k, unsigned e, const ScanOptions& opts);

/// RFC 4180 field quoting.
std::string csv_escape(const std::string& field);
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

// ---------------------------------------------------------------------------
// verify

enum class RowStatus { Match, Mismatch, HypothesisFailed, BoundedOnly };
std::string to_string(RowStatus s);

struct ReportRow {
  std::string group;
  std::string case_id;
  std::string params;
  std::string expected;
  std::string source;  // where the expected value comes from
  std::string computed;
  RowStatus status;
};

struct VerifyOptions {
  std::optional<std::string> only;  // restrict to one group
  bool inject_mismatch = false;     // corrupt the first expected value
};

/// Group names accepted by VerifyOptions::only.
std::vector<std::string> verify_groups();

/// Runs every check. Throws InvalidArgument for an unknown group.
std::vector<ReportRow> run_verification(const VerifyOptions& opts);

/// True iff every row is Match or an anticipated HypothesisFailed.
bool all_rows_pass(const std::vector<ReportRow>& rows);

void write_rows_table(std::ostream& out, const std::vector<ReportRow>& rows);
void write_rows_csv(std::ostream& out, const std::vector<ReportRow>& rows);
nlohmann::json rows_json(const std::vector<ReportRow>& rows);

}  // namespace gll::cli
