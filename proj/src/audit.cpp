#include "mkfib/audit.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "mkfib/closed_form.hpp"
#include "mkfib/fixtures.hpp"
#include "mkfib/genfunc.hpp"
#include "mkfib/transforms.hpp"

namespace mkfib::audit {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::InfoDiscrepancy: return "INFO-DISCREPANCY";
    }
    return "?";
}

std::string to_string(ClaimClass c) { return c == ClaimClass::Identity ? "identity" : "stated"; }

void validate(const AuditConfig& cfg) {
    if (cfg.k_min < 1 || cfg.k_min > cfg.k_max)
        throw std::invalid_argument("need 1 <= k-min <= k-max");
    if (cfg.n_max < 2) throw std::invalid_argument("need n-max >= 2");
}

namespace {

Comparison compare(const RingElem& expected, const RingElem& got, std::string label = {}) {
    return {expected == got, expected.to_string(), got.to_string(), std::move(label)};
}

Comparison compare(const IdentitySides& s) { return compare(s.lhs, s.rhs); }

RingElem truth(TransformKind kind, const RingElem& k, Index n) {
    return terms(transform_rec_spec(kind, k), n + 1)[n];
}

std::string kind_text(TransformKind kind) { return std::string(name(kind)); }

constexpr double kFloatTolerance = 1e-9;

Claim sweep_claim(std::string id, std::string desc, std::string cite, ClaimClass cls, PointSweep sweep) {
    Claim c;
    c.id = std::move(id);
    c.description = std::move(desc);
    c.citation = std::move(cite);
    c.cls = cls;
    c.sweep = std::move(sweep);
    return c;
}

std::vector<FixtureFinding> check_tables(bool k_binomial) {
    std::vector<FixtureFinding> out;
    for (const auto& fx : table_fixtures()) {
        if ((fx.kind == TransformKind::KBinomial) != k_binomial) continue;
        FixtureFinding f{fx.label, fx.oeis_note, 0, std::nullopt};
        const RingElem k = RingElem::numeric(fx.k);
        for (Index n = 0; n < fx.values.size(); ++n) {
            ++f.checked;
            RingElem computed = transform_direct(fx.kind, k, n);
            if (computed.as_int() != fx.values[n]) {
                f.mismatch = Counterexample{fx.k, n, fx.values[n].to_string(), computed.to_string(), fx.label};
                break;
            }
        }
        out.push_back(std::move(f));
    }
    return out;
}

Comparison replay_table(const Counterexample& cx) {
    for (const auto& fx : table_fixtures()) {
        if (fx.label != cx.label) continue;
        if (cx.n >= fx.values.size()) throw std::out_of_range("fixture index out of range");
        RingElem computed = transform_direct(fx.kind, RingElem::numeric(fx.k), cx.n);
        return {computed.as_int() == fx.values[cx.n], fx.values[cx.n].to_string(), computed.to_string(), fx.label};
    }
    throw std::invalid_argument("no fixture labelled " + cx.label);
}

std::vector<Claim> build_registry() {
    using K = TransformKind;
    std::vector<Claim> reg;
    auto id = [](int i) {
        std::ostringstream os;
        os << 'C' << std::setw(2) << std::setfill('0') << i;
        return os.str();
    };
    const std::array<std::string, 4> rec_cites{
        "binomial transform recurrence b(n+1) = (k+2)b(n) - k b(n-1), b0=2, b1=4",
        "k-binomial transform recurrence w(n+1) = k(k+2)w(n) - k^3 w(n-1), w0=2, w1=4k",
        "rising k-binomial transform recurrence r(n+1) = (k^2+2)r(n) - r(n-1), r0=2, r1=2k+2",
        "falling k-binomial transform recurrence f(n+1) = 3k f(n) - (2k^2-1)f(n-1), f0=2, f1=2k+2",
    };
    const std::array<std::string, 4> binet_cites{
        "Binet form of b: 4 U_n - 2k U_{n-1} over roots of x^2-(k+2)x+k",
        "Binet form of w: 4 U_n - 2k U_{n-1} over roots of x^2-k(k+2)x+k^3",
        "Binet form of r: (2k+2) U_n - 2 U_{n-1} over roots of x^2-(k^2+2)x+1",
        "Binet form of f: (2k+2) U_n - 2 U_{n-1} over roots of x^2-3kx+(2k^2-1)",
    };
    const std::array<std::string, 4> gf_cites{
        "generating function b_k(x) = 2(1-2kx) / (1-(k+2)x+kx^2)",
        "generating function w_k(x) = 2(1-k^2x) / (1-k(k+2)x+k^3x^2)",
        "generating function r_k(x) = (2-(2k^2-2k+2)x) / (1-(k^2+2)x+x^2)",
        "generating function f_k(x) = (2+(2-4k)x) / (1-3kx+(2k^2-1)x^2)",
    };

    int next = 1;
    for (std::size_t i = 0; i < kAllKinds.size(); ++i) {
        K kind = kAllKinds[i];
        reg.push_back(sweep_claim(id(next++), "direct sum = closed recurrence (" + kind_text(kind) + ")", rec_cites[i],
                                  ClaimClass::Identity,
                                  {[kind](const RingElem& k, Index n) {
                                       return compare(truth(kind, k, n), transform_direct(kind, k, n));
                                   }}));
    }
    reg.push_back(sweep_claim(id(next++), "b(n+1) - b(n) = sum C(n,i) M(i+1)", "binomial transform difference lemma",
                              ClaimClass::Identity,
                              {[](const RingElem& k, Index n) { return compare(binomial_diff_identity(k, n)); }}));
    reg.push_back(sweep_claim(id(next++), "f(n+1) - k f(n) = sum C(n,i) k^(n-i) M(i+1)",
                              "falling k-binomial transform difference lemma", ClaimClass::Identity,
                              {[](const RingElem& k, Index n) { return compare(falling_diff_identity(k, n)); }}));
    reg.push_back(sweep_claim(id(next++), "r(n) = M(2n)", "rising k-binomial transform even-index lemma",
                              ClaimClass::Identity,
                              {[](const RingElem& k, Index n) { return compare(rising_even_index(k, n)); }}));
    reg.push_back(sweep_claim(id(next++), "w(n) = k^n b(n)", "k-binomial scaling identity", ClaimClass::Identity,
                              {[](const RingElem& k, Index n) { return compare(w_scaling(k, n)); }}));
    reg.push_back(sweep_claim(id(next++), "M(n) = 2(F(n) + F(n-1))", "identity linking M_{k,n} and F_{k,n}",
                              ClaimClass::Identity,
                              {[](const RingElem& k, Index n) {
                                   return compare(terms(modified_k_fib_spec(k), n + 1)[n], m_from_f(k, n));
                               },
                               1}));
    reg.push_back(sweep_claim(id(next++), "F(n) = (1/2) sum (-1)^i M(n-i)", "alternating-sum inverse identity",
                              ClaimClass::Identity,
                              {[](const RingElem& k, Index n) {
                                   return compare(terms(k_fib_spec(k), n + 1)[n], f_from_m(k, n));
                               },
                               1}));
    for (std::size_t i = 0; i < kAllKinds.size(); ++i) {
        K kind = kAllKinds[i];
        reg.push_back(sweep_claim(id(next++), "stated Binet form = ground truth (" + kind_text(kind) + ")",
                                  binet_cites[i], ClaimClass::Stated,
                                  {[kind](const RingElem& k, Index n) {
                                       return compare(truth(kind, k, n), claimed_binet(kind, k, n));
                                   },
                                   1}));
    }
    for (std::size_t i = 0; i < kAllKinds.size(); ++i) {
        K kind = kAllKinds[i];
        Claim c = sweep_claim(id(next++), "stated generating function expands to the sequence (" + kind_text(kind) + ")",
                              gf_cites[i], ClaimClass::Stated,
                              {[kind](const RingElem& k, Index n) {
                                   return compare(truth(kind, k, n), gf_expand(claimed_gf(kind, k), n + 1)[n]);
                               }});
        c.note = [kind](const AuditConfig& cfg) {
            RingElem k = cfg.symbolic ? RingElem::symbol() : RingElem::numeric(cfg.k_min);
            bool same = gf_equivalent(claimed_gf(kind, k), gf_from_rec(transform_rec_spec(kind, k)));
            std::string where = cfg.symbolic ? "as polynomials in k" : "at k=" + std::to_string(cfg.k_min);
            return std::string("stated GF ") + (same ? "equals" : "differs from") +
                   " the recurrence-derived GF " + where + "; derived: " +
                   gf_from_rec(transform_rec_spec(kind, k)).to_string();
        };
        reg.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < kAllKinds.size(); ++i) {
        K kind = kAllKinds[i];
        reg.push_back(sweep_claim(
            id(next++), "corrected Binet x1 U_n - Q x0 U_{n-1} = iteration (" + kind_text(kind) + ")",
            "derived closed form fixed by the recurrence's own initial conditions", ClaimClass::Identity,
            {[kind](const RingElem& k, Index n) {
                auto rec = transform_rec_spec(kind, k);
                return compare(terms(rec, n + 1)[n], binet_closed(rec, n));
            }}));
    }
    {
        Claim c;
        c.id = id(next++);
        c.description = "published tables B1-B5, R1-R5, F1-F5 = computed";
        c.citation = "lists of first binomial, rising and falling k-binomial transforms";
        c.cls = ClaimClass::Stated;
        c.fixtures = [] { return check_tables(false); };
        c.fixture_replay = replay_table;
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = id(next++);
        c.description = "published tables W1-W5 = computed";
        c.citation = "list of first k-binomial transforms";
        c.cls = ClaimClass::Stated;
        c.fixtures = [] { return check_tables(true); };
        c.fixture_replay = replay_table;
        reg.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = id(next++);
        c.description = "printed polynomials M_{k,2}..M_{k,5} = symbolic iteration";
        c.citation = "first few modified k-Fibonacci-like numbers";
        c.cls = ClaimClass::Stated;
        c.fixtures = [] {
            std::vector<FixtureFinding> out;
            auto m = terms(modified_k_fib_spec(RingElem::symbol()), 6);
            for (const auto& fx : m_poly_fixtures()) {
                FixtureFinding f{fx.label, {}, 1, std::nullopt};
                if (!(m[fx.n] == RingElem(fx.value)))
                    f.mismatch = Counterexample{std::nullopt, fx.n, fx.value.to_string(), m[fx.n].to_string(), fx.label};
                out.push_back(std::move(f));
            }
            return out;
        };
        c.fixture_replay = [](const Counterexample& cx) {
            for (const auto& fx : m_poly_fixtures()) {
                if (fx.label != cx.label) continue;
                auto m = terms(modified_k_fib_spec(RingElem::symbol()), fx.n + 1)[fx.n];
                return compare(RingElem(fx.value), m, fx.label);
            }
            throw std::invalid_argument("no fixture labelled " + cx.label);
        };
        reg.push_back(std::move(c));
    }
    {
        PointSweep s{[](const RingElem& k, Index n) {
                         for (K kind : kAllKinds) {
                             auto rec = transform_rec_spec(kind, k);
                             RingElem exact = binet_closed(rec, n);
                             double approx = binet_float(rec, n);
                             double ref = exact.as_int().to_double();
                             double rel = std::abs(approx - ref) / std::abs(ref);
                             if (!(rel <= kFloatTolerance)) {
                                 std::ostringstream os;
                                 os << std::setprecision(17) << approx << " (rel err " << rel << ")";
                                 return Comparison{false, exact.to_string(), os.str(), kind_text(kind)};
                             }
                         }
                         return Comparison{};
                     },
                     0, Index{40}, std::int64_t{5}, 0};
        reg.push_back(sweep_claim(id(next++), "double-precision Binet within 1e-9 relative (all kinds)",
                                  "root-power form C1 r1^n + C2 r2^n with r1 > r2", ClaimClass::Identity,
                                  std::move(s)));
    }
    return reg;
}

}  // namespace

Comparison Claim::replay(const Counterexample& cx) const {
    if (sweep) {
        RingElem k = cx.k ? RingElem::numeric(*cx.k) : RingElem::symbol();
        return sweep->check(k, cx.n);
    }
    return fixture_replay(cx);
}

const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> reg = build_registry();
    return reg;
}

const Claim& find_claim(const std::string& id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown claim " + id);
}

ClaimResult run_claim(const Claim& claim, const AuditConfig& cfg) {
    ClaimResult r{claim.id, claim.description, claim.citation, claim.cls, Verdict::Pass, 0, std::nullopt, {}, {}};
    const Verdict on_mismatch = claim.cls == ClaimClass::Identity ? Verdict::Fail : Verdict::InfoDiscrepancy;

    if (claim.sweep) {
        const PointSweep& s = *claim.sweep;
        const Index n_hi = s.n_cap ? std::min(*s.n_cap, cfg.n_max) : cfg.n_max;
        const std::int64_t k_hi = s.k_cap ? std::min(*s.k_cap, cfg.k_max) : cfg.k_max;
        auto record = [&](std::optional<std::int64_t> k, Index n, Comparison c) {
            r.counterexample = Counterexample{k, n, std::move(c.expected), std::move(c.got), std::move(c.label)};
            r.verdict = on_mismatch;
        };
        for (Index n = s.n_min; n <= n_hi && !r.counterexample; ++n) {
            for (std::int64_t k = cfg.k_min; k <= k_hi; ++k) {
                ++r.checked;
                Comparison c = s.check(RingElem::numeric(k), n);
                if (!c.ok) {
                    record(k, n, std::move(c));
                    break;
                }
            }
        }
        if (cfg.symbolic && !r.counterexample && s.symbolic_n_cap > 0) {
            const Index sym_hi = std::min(s.symbolic_n_cap, cfg.n_max);
            const RingElem k = RingElem::symbol();
            for (Index n = s.n_min; n <= sym_hi; ++n) {
                ++r.checked;
                Comparison c = s.check(k, n);
                if (!c.ok) {
                    record(std::nullopt, n, std::move(c));
                    break;
                }
            }
        }
    } else {
        r.fixtures = claim.fixtures();
        for (const auto& f : r.fixtures) {
            r.checked += f.checked;
            if (f.mismatch && !r.counterexample) {
                r.counterexample = f.mismatch;
                r.verdict = on_mismatch;
            }
        }
    }
    if (claim.note) r.note = claim.note(cfg);
    return r;
}

AuditReport run_audit(const AuditConfig& cfg) {
    validate(cfg);
    const auto& reg = claim_registry();
    AuditReport report{cfg, std::vector<ClaimResult>(reg.size())};

    unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(reg.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < reg.size();) {
            try {
                report.results[i] = run_claim(reg[i], cfg);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);
    return report;
}

std::size_t AuditReport::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [v](const ClaimResult& r) { return r.verdict == v; }));
}

const ClaimResult& AuditReport::result(const std::string& id) const {
    for (const auto& r : results)
        if (r.id == id) return r;
    throw std::invalid_argument("no result for " + id);
}

namespace {

std::string k_text(const std::optional<std::int64_t>& k) { return k ? std::to_string(*k) : "k"; }

std::string describe(const Counterexample& cx, bool table) {
    std::ostringstream os;
    if (!cx.label.empty()) os << cx.label << ": ";
    os << "k=" << k_text(cx.k) << " n=" << cx.n;
    if (table)
        os << " published " << cx.expected << " computed " << cx.got;
    else
        os << " expected " << cx.expected << " got " << cx.got;
    return os.str();
}

}  // namespace

std::string AuditReport::to_text(const TextOptions& opts) const {
    std::ostringstream os;
    const std::string rule(std::max<std::size_t>(opts.width, 20), '-');
    os << "claim audit  k=" << config.k_min << ".." << config.k_max << "  n<=" << config.n_max
       << "  symbolic=" << (config.symbolic ? "on" : "off") << '\n'
       << rule << '\n';
    const std::size_t desc_col = opts.width > 40 ? opts.width - 40 : 20;
    for (const auto& r : results) {
        std::string verdict = to_string(r.verdict);
        std::string shown = verdict;
        if (opts.color) {
            const char* code = r.verdict == Verdict::Pass ? "32" : r.verdict == Verdict::Fail ? "31" : "33";
            shown = std::string("\x1b[") + code + "m" + verdict + "\x1b[0m";
        }
        std::string desc = r.description;
        if (desc.size() < desc_col) desc.resize(desc_col, ' ');
        os << r.id << "  " << shown << std::string(verdict.size() < 16 ? 16 - verdict.size() : 0, ' ') << "  "
           << desc << "  [" << r.checked << " checked]\n";
        os << "      ref: " << r.citation << '\n';
        const bool table = !r.fixtures.empty();
        if (r.counterexample) os << "      first counterexample: " << describe(*r.counterexample, table) << '\n';
        for (const auto& f : r.fixtures) {
            os << "      " << f.label << ": ";
            if (f.mismatch)
                os << "mismatch at n=" << f.mismatch->n << " (published " << f.mismatch->expected << ", computed "
                   << f.mismatch->got << ")";
            else
                os << "matches all " << f.checked << " entries";
            if (!f.note.empty()) os << "  [OEIS note: " << f.note << "]";
            os << '\n';
        }
        if (!r.note.empty()) os << "      note: " << r.note << '\n';
    }
    os << rule << '\n'
       << "summary: " << count(Verdict::Pass) << " pass, " << count(Verdict::Fail) << " fail, "
       << count(Verdict::InfoDiscrepancy) << " info-discrepancy (published statement disagrees with computation)\n";
    return os.str();
}

namespace {

nlohmann::ordered_json to_json(const Counterexample& cx) {
    nlohmann::ordered_json j;
    if (cx.k)
        j["k"] = *cx.k;
    else
        j["k"] = "symbolic";
    j["n"] = cx.n;
    j["expected"] = cx.expected;
    j["got"] = cx.got;
    if (!cx.label.empty()) j["label"] = cx.label;
    return j;
}

}  // namespace

std::string AuditReport::to_json_lines() const {
    std::ostringstream os;
    for (const auto& r : results) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["verdict"] = to_string(r.verdict);
        j["class"] = to_string(r.cls);
        j["description"] = r.description;
        j["citation"] = r.citation;
        j["checked"] = r.checked;
        j["counterexample"] = r.counterexample ? to_json(*r.counterexample) : nlohmann::ordered_json(nullptr);
        if (!r.fixtures.empty()) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& f : r.fixtures) {
                nlohmann::ordered_json fj;
                fj["label"] = f.label;
                fj["checked"] = f.checked;
                fj["mismatch"] = f.mismatch ? to_json(*f.mismatch) : nlohmann::ordered_json(nullptr);
                if (!f.note.empty()) fj["oeis_note"] = f.note;
                arr.push_back(std::move(fj));
            }
            j["fixtures"] = std::move(arr);
        }
        if (!r.note.empty()) j["note"] = r.note;
        os << j.dump() << '\n';
    }
    nlohmann::ordered_json s;
    s["summary"] = {{"k_min", config.k_min},
                    {"k_max", config.k_max},
                    {"n_max", config.n_max},
                    {"symbolic", config.symbolic},
                    {"pass", count(Verdict::Pass)},
                    {"fail", count(Verdict::Fail)},
                    {"info_discrepancy", count(Verdict::InfoDiscrepancy)}};
    os << s.dump() << '\n';
    return os.str();
}

}  // namespace mkfib::audit
