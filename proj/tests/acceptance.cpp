// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "mkfib/audit.hpp"
#include "mkfib/bench.hpp"
#include "mkfib/closed_form.hpp"
#include "mkfib/fixtures.hpp"
#include "mkfib/genfunc.hpp"

using namespace mkfib;

namespace {

RingElem num(std::int64_t v) { return RingElem::numeric(v); }

// Collects the first problem found; later ones are ignored.
struct Checker {
    std::string problem;
    void expect(bool ok, const std::string& what) {
        if (!ok && problem.empty()) problem = what;
    }
};

const audit::AuditReport& default_report() {
    static const audit::AuditReport r = audit::run_audit(audit::AuditConfig{});
    return r;
}

bool counterexample_is(const audit::ClaimResult& r, std::int64_t k, Index n, const std::string& expected,
                       const std::string& got) {
    return r.counterexample && r.counterexample->k == k && r.counterexample->n == n &&
           r.counterexample->expected == expected && r.counterexample->got == got;
}

void tables(Checker& c) {
    for (const auto& fx : table_fixtures()) {
        if (fx.kind == TransformKind::KBinomial && fx.label != "W1") continue;
        for (std::size_t n = 0; n < fx.values.size(); ++n)
            c.expect(transform_direct(fx.kind, num(fx.k), n).as_int() == fx.values[n],
                     fx.label + " entry " + std::to_string(n));
        c.expect(fx.values.size() >= 5, fx.label + " too short");
    }
}

void w_discrepancy(Checker& c) {
    const auto& r = default_report().result("C24");
    c.expect(r.verdict == audit::Verdict::InfoDiscrepancy, "C24 verdict");
    struct Want {
        std::string label;
        std::int64_t k;
        std::string printed, computed;
    };
    const Want want[] = {{"W2", 2, "96", "48"}, {"W3", 3, "378", "126"}, {"W4", 4, "1024", "256"}, {"W5", 5, "2250", "450"}};
    for (const auto& w : want) {
        bool found = false;
        for (const auto& f : r.fixtures) {
            if (f.label != w.label) continue;
            found = f.mismatch && f.mismatch->k == w.k && f.mismatch->n == 2 && f.mismatch->expected == w.printed &&
                    f.mismatch->got == w.computed;
        }
        c.expect(found, w.label + " counterexample");
        RingElem k = num(w.k);
        c.expect(transform_direct(TransformKind::KBinomial, k, 2).to_string() == w.computed, w.label + " direct");
        c.expect(terms(transform_rec_spec(TransformKind::KBinomial, k), 3)[2].to_string() == w.computed,
                 w.label + " recurrence");
    }
}

void oracle_equivalence(Checker& c) {
    for (auto kind : kAllKinds) {
        for (std::int64_t k = 1; k <= 10; ++k) {
            auto rec = terms(transform_rec_spec(kind, num(k)), 65);
            for (Index n = 0; n <= 64; ++n)
                c.expect(transform_direct(kind, num(k), n) == rec[n], std::string(name(kind)) + " numeric");
        }
        auto rec = terms(transform_rec_spec(kind, RingElem::symbol()), 17);
        for (Index n = 0; n <= 16; ++n)
            c.expect(transform_direct(kind, RingElem::symbol(), n) == rec[n], std::string(name(kind)) + " symbolic");
    }
}

void lemmas(Checker& c) {
    auto at = [&](const RingElem& k, Index n_max) {
        for (Index n = 0; n <= n_max; ++n) {
            c.expect(binomial_diff_identity(k, n).holds(), "binomial difference");
            c.expect(falling_diff_identity(k, n).holds(), "falling difference");
            c.expect(rising_even_index(k, n).holds(), "rising even index");
            c.expect(w_scaling(k, n).holds(), "k-binomial scaling");
        }
        auto m = terms(modified_k_fib_spec(k), n_max + 1);
        auto f = terms(k_fib_spec(k), n_max + 1);
        for (Index n = 1; n <= n_max; ++n) {
            c.expect(m_from_f(k, n) == m[n], "M from F");
            c.expect(f_from_m(k, n) == f[n], "F from M");
        }
    };
    for (std::int64_t k = 1; k <= 10; ++k) at(num(k), 64);
    at(RingElem::symbol(), 16);
    for (const char* id : {"C05", "C06", "C07", "C08", "C09", "C10"})
        c.expect(default_report().result(id).verdict == audit::Verdict::Pass, std::string(id) + " verdict");
}

void binet(Checker& c) {
    auto at = [&](const RingElem& k, Index n_max) {
        for (auto kind : kAllKinds) {
            auto rec = transform_rec_spec(kind, k);
            auto t = terms(rec, n_max + 1);
            for (Index n = 0; n <= n_max; ++n) c.expect(binet_closed(rec, n) == t[n], std::string(name(kind)) + " closed form");
            if (kind == TransformKind::Binomial || kind == TransformKind::RisingK)
                for (Index n = 1; n <= n_max; ++n) c.expect(claimed_binet(kind, k, n) == t[n], std::string(name(kind)) + " stated");
        }
    };
    for (std::int64_t k = 1; k <= 10; ++k) at(num(k), 64);
    at(RingElem::symbol(), 16);
    const auto& r = default_report();
    c.expect(r.result("C11").verdict == audit::Verdict::Pass, "C11");
    c.expect(r.result("C13").verdict == audit::Verdict::Pass, "C13");
    c.expect(counterexample_is(r.result("C12"), 2, 1, "8", "4"), "C12 counterexample");
    c.expect(counterexample_is(r.result("C14"), 2, 2, "22", "34"), "C14 counterexample");
    for (const char* id : {"C19", "C20", "C21", "C22"})
        c.expect(r.result(id).verdict == audit::Verdict::Pass, std::string(id) + " verdict");
}

void genfuncs(Checker& c) {
    auto round_trip = [&](const RingElem& k) {
        std::vector<Order2Rec> recs{modified_k_fib_spec(k), k_fib_spec(k)};
        for (auto kind : kAllKinds) recs.push_back(transform_rec_spec(kind, k));
        for (const auto& rec : recs) c.expect(gf_expand(gf_from_rec(rec), 33) == terms(rec, 33), "round trip " + rec.label);
    };
    for (std::int64_t k = 1; k <= 10; ++k) round_trip(num(k));
    round_trip(RingElem::symbol());

    RingElem k = RingElem::symbol();
    for (auto kind : {TransformKind::KBinomial, TransformKind::RisingK, TransformKind::FallingK}) {
        auto stated = claimed_gf(kind, k);
        auto derived = gf_from_rec(transform_rec_spec(kind, k));
        c.expect(stated.num == derived.num && stated.den == derived.den, std::string(name(kind)) + " stated GF");
    }
    c.expect(!gf_equivalent(claimed_gf(TransformKind::Binomial, k), gf_from_rec(transform_rec_spec(TransformKind::Binomial, k))),
             "binomial stated GF unexpectedly equivalent");
    for (std::int64_t kv = 1; kv <= 10; ++kv) {
        auto stated = gf_expand(claimed_gf(TransformKind::Binomial, num(kv)), 2);
        auto truth = terms(transform_rec_spec(TransformKind::Binomial, num(kv)), 2);
        c.expect(stated[0] == truth[0] && stated[1] != truth[1], "binomial divergence index");
    }
    const auto& r = default_report();
    c.expect(counterexample_is(r.result("C15"), 1, 1, "4", "2"), "C15 counterexample");
    for (const char* id : {"C16", "C17", "C18"})
        c.expect(r.result(id).verdict == audit::Verdict::Pass, std::string(id) + " verdict");
}

void float_binet(Checker& c) {
    for (std::int64_t k = 1; k <= 5; ++k)
        for (auto kind : kAllKinds) {
            auto rec = transform_rec_spec(kind, num(k));
            auto t = terms(rec, 41);
            for (Index n = 0; n <= 40; ++n) {
                double exact = t[n].as_int().to_double();
                c.expect(std::abs(binet_float(rec, n) - exact) <= 1e-9 * std::abs(exact), std::string(name(kind)) + " float");
            }
        }
    c.expect(default_report().result("C26").verdict == audit::Verdict::Pass, "C26 verdict");
}

void fast_path(Checker& c) {
    const Index points[] = {0, 1, 2, 63, 64, 1000, 100000};
    for (std::int64_t k : {1, 2, 10}) {
        for (auto rec : {modified_k_fib_spec(num(k)), k_fib_spec(num(k))}) {
            std::size_t next = 0;
            for_each_term(rec, points[6] + 1, [&](Index n, const RingElem& v) {
                if (n != points[next]) return;
                c.expect(term_fast(rec, n) == v, rec.label + " fast path at n=" + std::to_string(n));
                ++next;
            });
        }
        for (auto kind : kAllKinds) {
            auto rec = transform_rec_spec(kind, num(k));
            std::size_t next = 0;
            for_each_term(rec, points[5] + 1, [&](Index n, const RingElem& v) {
                if (n != points[next]) return;
                c.expect(term_fast(rec, n) == v, std::string(name(kind)) + " fast path at n=" + std::to_string(n));
                ++next;
            });
        }
    }
    auto start = std::chrono::steady_clock::now();
    BenchRow row = bench_transform(TransformKind::Binomial, 2, 100000);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(row.values_equal, "bench strategies disagree");
    c.expect(row.timings.size() == 3, "bench strategy count");
    c.expect(secs < 10.0, "bench exceeded 10 s");
}

void determinism(Checker& c) {
    std::ostringstream a, b, err;
    int ca = cli::run({"audit"}, a, err);
    int cb = cli::run({"audit"}, b, err);
    c.expect(ca == 0 && cb == 0, "audit exit status");
    c.expect(!a.str().empty() && a.str() == b.str(), "audit reports differ");
}

struct Criterion {
    int number;
    const char* title;
    double limit_seconds;  // 0: no limit
    std::function<void(Checker&)> body;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "table reproduction", 1.0, tables},
        {2, "k-binomial table discrepancy detection", 0, w_discrepancy},
        {3, "direct sum = closed recurrence", 30.0, oracle_equivalence},
        {4, "lemma suite", 0, lemmas},
        {5, "Binet forms", 0, binet},
        {6, "generating functions", 0, genfuncs},
        {7, "float Binet tolerance", 0, float_binet},
        {8, "fast path and bench", 0, fast_path},
        {9, "audit determinism", 0, determinism},
    };
    int failures = 0;
    for (const auto& cr : criteria) {
        Checker c;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.body(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.limit_seconds > 0 && secs >= cr.limit_seconds)
            c.expect(false, "took " + std::to_string(secs) + " s");
        bool ok = c.problem.empty();
        failures += !ok;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (ok ? "PASS" : "FAIL") << "  " << cr.number << "  " << cr.title << "  (" << secs << " s)";
        if (!ok) line << "  " << c.problem;
        std::cout << line.str() << '\n';
    }
    return failures == 0 ? 0 : 1;
}
