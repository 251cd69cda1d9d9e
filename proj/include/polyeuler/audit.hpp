#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyeuler {

enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Verdict v);

/// First mismatching grid point, in grid iteration order.
struct Counterexample {
  std::vector<std::pair<std::string, std::string>> params;
  std::string expected;
  std::string actual;
};

struct AuditConfig {
  std::uint64_t seed = 0;
  std::size_t order = 10;
};

struct AuditEntry {
  std::string id;
  std::optional<std::string> variant;
  std::uint64_t grid_size = 0;
  Verdict verdict = Verdict::Pass;
  std::optional<Counterexample> counterexample;
  std::string notes;
  /// Documented inconsistency: a non-PASS verdict here does not fail a run.
  bool whitelisted = false;

  bool unexpected() const { return verdict != Verdict::Pass && !whitelisted; }
};

/// One registered claim, checked by exact comparison over a finite grid.
struct IdentityCase {
  std::string id;
  std::optional<std::string> variant;
  bool whitelisted = false;
  std::string description;
  std::function<AuditEntry(const AuditConfig&)> run;
};

/// Every registered case, sorted by (id, variant).
const std::vector<IdentityCase>& registry();

/// Cases with the given id, optionally restricted to one variant.
/// Throws UnknownIdentity when nothing matches.
std::vector<const IdentityCase*> find_cases(std::string_view id, std::optional<std::string_view> variant = {});

AuditEntry run_identity(const IdentityCase& c, const AuditConfig& config);

struct AuditReport {
  std::uint64_t seed = 0;
  std::size_t order = 0;
  std::vector<AuditEntry> entries;

  bool has_unexpected() const;
};

AuditReport run_all(const AuditConfig& config);

/// Serializes to the report schema; identical reports give identical bytes.
std::string to_json(const AuditReport& report);

/// "thm2: PASS (grid=975)" style one-liner.
std::string summary_line(const AuditEntry& entry);

}  // namespace polyeuler
