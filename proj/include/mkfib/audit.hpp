#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mkfib/ring.hpp"
#include "mkfib/sequences.hpp"

namespace mkfib::audit {

enum class Verdict { Pass, Fail, InfoDiscrepancy };

/// Identity: a computational equivalence the artifact relies on; a mismatch
/// is an implementation failure. Stated: a formula, table or polynomial taken
/// literally from the source; a mismatch indicts the source.
enum class ClaimClass { Identity, Stated };

std::string to_string(Verdict v);
std::string to_string(ClaimClass c);

/// One evaluation of a claim at a single point.
struct Comparison {
    bool ok = true;
    std::string expected;
    std::string got;
    std::string label;  // sub-case, e.g. a transform kind; may be empty
};

struct Counterexample {
    std::optional<std::int64_t> k;  // nullopt: symbolic k
    Index n = 0;
    std::string expected;
    std::string got;
    std::string label;
};

struct AuditConfig {
    std::int64_t k_min = 1;
    std::int64_t k_max = 10;
    Index n_max = 64;
    bool symbolic = true;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Throws std::invalid_argument unless 1 <= k_min <= k_max and n_max >= 2.
void validate(const AuditConfig& cfg);

/// Sweep over (k, n): n ascending, then k ascending, numeric before symbolic.
struct PointSweep {
    std::function<Comparison(const RingElem& k, Index n)> check;
    Index n_min = 0;
    std::optional<Index> n_cap = std::nullopt;         // further limit on n_max
    std::optional<std::int64_t> k_cap = std::nullopt;  // further limit on k_max
    Index symbolic_n_cap = 16;                          // 0: numeric only
};

struct FixtureFinding {
    std::string label;
    std::string note;
    std::size_t checked = 0;
    std::optional<Counterexample> mismatch;
};

struct Claim {
    std::string id;
    std::string description;
    std::string citation;
    ClaimClass cls = ClaimClass::Identity;
    std::optional<PointSweep> sweep;
    std::function<std::vector<FixtureFinding>()> fixtures;
    /// Extra fact appended to the report, e.g. a rational-function identity.
    std::function<std::string(const AuditConfig&)> note;

    /// Re-evaluates the claim at a counterexample's coordinates.
    Comparison replay(const Counterexample& cx) const;

    std::function<Comparison(const Counterexample&)> fixture_replay;
};

/// C01..C26, ordered by id.
const std::vector<Claim>& claim_registry();
const Claim& find_claim(const std::string& id);

struct ClaimResult {
    std::string id;
    std::string description;
    std::string citation;
    ClaimClass cls = ClaimClass::Identity;
    Verdict verdict = Verdict::Pass;
    std::size_t checked = 0;
    std::optional<Counterexample> counterexample;
    std::vector<FixtureFinding> fixtures;
    std::string note;
};

ClaimResult run_claim(const Claim& claim, const AuditConfig& cfg);

struct TextOptions {
    std::size_t width = 100;
    bool color = false;
};

struct AuditReport {
    AuditConfig config;
    std::vector<ClaimResult> results;

    std::size_t count(Verdict v) const;
    bool has_implementation_failure() const { return count(Verdict::Fail) > 0; }
    const ClaimResult& result(const std::string& id) const;

    std::string to_text(const TextOptions& opts = {}) const;
    /// One JSON object per claim, then one summary object.
    std::string to_json_lines() const;
};

AuditReport run_audit(const AuditConfig& cfg);

}  // namespace mkfib::audit
