#include "cli.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mkfib/audit.hpp"
#include "mkfib/bench.hpp"
#include "mkfib/closed_form.hpp"
#include "mkfib/genfunc.hpp"
#include "mkfib/sequences.hpp"
#include "mkfib/transforms.hpp"

namespace mkfib::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Plain, Csv, JsonLines, BFile };

const std::map<std::string, Format> kFormats{
    {"plain", Format::Plain}, {"csv", Format::Csv}, {"json-lines", Format::JsonLines}, {"bfile", Format::BFile}};

const std::vector<std::string> kKindNames{"binomial", "kbinomial", "rising", "falling"};

/// Streams (index, value) pairs in one of the output formats.
class TermWriter {
public:
    TermWriter(std::ostream& out, Format fmt) : out_(out), fmt_(fmt) {
        if (fmt_ == Format::Csv) out_ << "n,value\n";
    }

    void write(Index n, const std::string& value) {
        switch (fmt_) {
            case Format::Plain:
                if (written_ > 0) out_ << ',';
                out_ << value;
                break;
            case Format::Csv: out_ << n << ',' << value << '\n'; break;
            case Format::JsonLines: out_ << "{\"index\":" << n << ",\"value\":\"" << value << "\"}\n"; break;
            case Format::BFile: out_ << n << ' ' << value << '\n'; break;
        }
        ++written_;
    }

    void finish() {
        if (fmt_ == Format::Plain) out_ << '\n';
        out_.flush();
    }

private:
    std::ostream& out_;
    Format fmt_;
    std::size_t written_ = 0;
};

RingElem numeric_k(std::int64_t k) {
    if (k < 1) throw UsageError("--k must be >= 1");
    return RingElem::numeric(k);
}

TransformKind kind_of(const std::string& s) {
    if (auto kind = parse_kind(s)) return *kind;
    throw UsageError("unknown transform kind '" + s + "'");
}

std::size_t env_width() {
    if (const char* w = std::getenv("MKFIB_WIDTH")) {
        try {
            auto v = std::stoul(w);
            if (v >= 20 && v <= 1000) return v;
        } catch (const std::exception&) {
        }
    }
    return 100;
}

bool env_color() {
    const char* c = std::getenv("MKFIB_COLOR");
    return c != nullptr && std::string(c) == "1";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mkfib: modified k-Fibonacci-like sequences, their binomial-family transforms, and a claim audit", "mkfib"};
    app.require_subcommand(1);

    std::string family, kind_name, format_name = "plain", method = "recurrence";
    std::int64_t k = 1;
    std::size_t count = 10;
    Index n = 0;
    bool fast = false, verify = false, symbolic = false, exact = false, stated = false;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "plain | csv | json-lines | bfile")
            ->check(CLI::IsMember({"plain", "csv", "json-lines", "bfile"}));
    };

    auto* gen = app.add_subcommand("gen", "terms of M_{k,n} (modified) or F_{k,n} (kfib)");
    gen->add_option("family", family, "modified | kfib")->required()->check(CLI::IsMember({"modified", "kfib"}));
    gen->add_option("--k", k, "integer k >= 1")->required();
    gen->add_option("--count", count, "number of terms");
    gen->add_flag("--fast", fast, "evaluate each term by companion-matrix powering");
    add_format(gen);

    auto* tr = app.add_subcommand("transform", "terms of a binomial-family transform of M_{k,.}");
    tr->add_option("kind", kind_name, "binomial | kbinomial | rising | falling")
        ->required()
        ->check(CLI::IsMember(kKindNames));
    tr->add_option("--k", k, "integer k >= 1")->required();
    tr->add_option("--count", count, "number of terms");
    tr->add_option("--method", method, "direct | recurrence")->check(CLI::IsMember({"direct", "recurrence"}));
    tr->add_flag("--verify", verify, "compute both ways and require agreement");
    add_format(tr);

    auto* gf = app.add_subcommand("gf", "rational generating function of a transform");
    gf->add_option("kind", kind_name)->required()->check(CLI::IsMember(kKindNames));
    auto* gf_k = gf->add_option("--k", k, "integer k >= 1");
    auto* gf_sym = gf->add_flag("--symbolic", symbolic, "keep k as an indeterminate");
    gf_k->excludes(gf_sym);
    gf->add_option("--count", count, "also print this many series coefficients")->default_val(0);
    gf->add_flag("--stated", stated, "the generating function as published instead of the derived one");
    add_format(gf);

    auto* binet = app.add_subcommand("binet", "Binet-form evaluation of a transform term");
    binet->add_option("kind", kind_name)->required()->check(CLI::IsMember(kKindNames));
    binet->add_option("--k", k, "integer k >= 1")->required();
    binet->add_option("--n", n, "index")->required();
    binet->add_flag("--exact", exact, "exact Lucas-sequence form instead of double precision");
    binet->add_flag("--stated", stated, "evaluate the published coefficient pair (exact, n >= 1)");

    audit::AuditConfig acfg;
    std::string audit_format = "text";
    bool no_symbolic = false;
    auto* aud = app.add_subcommand("audit", "check every encoded claim and report counterexamples");
    aud->add_option("--k-min", acfg.k_min)->default_val(1);
    aud->add_option("--k-max", acfg.k_max)->default_val(10);
    aud->add_option("--n-max", acfg.n_max)->default_val(64);
    aud->add_flag("--no-symbolic", no_symbolic, "skip symbolic-k checks");
    aud->add_option("--threads", acfg.threads, "worker threads (0 = all cores)");
    aud->add_option("--format", audit_format, "text | json-lines")->check(CLI::IsMember({"text", "json-lines"}));

    std::vector<Index> bench_n{100000};
    std::string bench_kind = "binomial";
    auto* bench = app.add_subcommand("bench", "time iterative, matrix-power and direct-sum evaluation");
    bench->add_option("--k", k, "integer k >= 1")->default_val(2);
    bench->add_option("--n", bench_n, "one or more indices")->expected(1, -1);
    bench->add_option("--kind", bench_kind)->check(CLI::IsMember(kKindNames));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "mkfib: " << e.what() << '\n';
        return kUsage;
    }

    const Format fmt = kFormats.at(format_name);
    try {
        if (gen->parsed()) {
            RingElem kk = numeric_k(k);
            Order2Rec rec = family == "modified" ? modified_k_fib_spec(kk) : k_fib_spec(kk);
            TermWriter w(out, fmt);
            if (fast) {
                for (Index i = 0; i < count; ++i) w.write(i, term_fast(rec, i).to_string());
            } else {
                for_each_term(rec, count, [&](Index i, const RingElem& v) { w.write(i, v.to_string()); });
            }
            w.finish();
        } else if (tr->parsed()) {
            RingElem kk = numeric_k(k);
            TransformKind kind = kind_of(kind_name);
            Order2Rec rec = transform_rec_spec(kind, kk);
            TermWriter w(out, fmt);
            if (!verify && method == "recurrence") {
                for_each_term(rec, count, [&](Index i, const RingElem& v) { w.write(i, v.to_string()); });
            } else if (!verify) {
                for (Index i = 0; i < count; ++i) w.write(i, transform_direct(kind, kk, i).to_string());
            } else {
                auto by_rec = terms(rec, count);
                for (Index i = 0; i < count; ++i) {
                    RingElem direct = transform_direct(kind, kk, i);
                    if (!(direct == by_rec[i]))
                        throw VerificationError("direct sum " + direct.to_string() + " != recurrence " +
                                                by_rec[i].to_string() + " at n=" + std::to_string(i));
                    w.write(i, (method == "direct" ? direct : by_rec[i]).to_string());
                }
            }
            w.finish();
            if (verify)
                err << "verified: direct sum and closed recurrence agree on " << count << " terms\n";
        } else if (gf->parsed()) {
            TransformKind kind = kind_of(kind_name);
            if (!symbolic && gf_k->count() == 0) throw UsageError("gf needs --k or --symbolic");
            RingElem kk = symbolic ? RingElem::symbol() : numeric_k(k);
            RationalGF g = stated ? claimed_gf(kind, kk) : gf_from_rec(transform_rec_spec(kind, kk));
            out << g.to_string() << '\n';
            if (count > 0) {
                TermWriter w(out, fmt);
                auto coeffs = gf_expand(g, count);
                for (Index i = 0; i < coeffs.size(); ++i) w.write(i, coeffs[i].to_string());
                w.finish();
            }
        } else if (binet->parsed()) {
            RingElem kk = numeric_k(k);
            TransformKind kind = kind_of(kind_name);
            if (stated) {
                if (n == 0) throw UsageError("--stated needs --n >= 1");
                out << claimed_binet(kind, kk, n).to_string() << '\n';
            } else if (exact) {
                out << binet_closed(transform_rec_spec(kind, kk), n).to_string() << '\n';
            } else {
                std::ostringstream os;
                os << std::setprecision(17) << binet_float(transform_rec_spec(kind, kk), n);
                out << os.str() << '\n';
            }
        } else if (aud->parsed()) {
            acfg.symbolic = !no_symbolic;
            try {
                audit::validate(acfg);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            auto report = audit::run_audit(acfg);
            if (audit_format == "json-lines")
                out << report.to_json_lines();
            else
                out << report.to_text({env_width(), env_color()});
            out.flush();
            return report.has_implementation_failure() ? kVerificationFailed : kOk;
        } else if (bench->parsed()) {
            numeric_k(k);
            TransformKind kind = kind_of(bench_kind);
            bool all_equal = true;
            out << "kind=" << bench_kind << " k=" << k << '\n';
            out << std::left << std::setw(10) << "n" << std::setw(14) << "strategy" << std::right << std::setw(12)
                << "ms" << std::setw(12) << "digits" << '\n';
            for (Index bn : bench_n) {
                BenchRow row = bench_transform(kind, k, bn);
                for (const auto& t : row.timings) {
                    out << std::left << std::setw(10) << bn << std::setw(14) << t.strategy << std::right
                        << std::setw(12) << std::fixed << std::setprecision(2) << t.millis << std::setw(12)
                        << t.value.as_int().decimal_digits() << '\n';
                }
                out << "n=" << bn << " values " << (row.values_equal ? "identical" : "DIFFER") << " across strategies\n";
                all_equal = all_equal && row.values_equal;
            }
            out.flush();
            return all_equal ? kOk : kVerificationFailed;
        }
    } catch (const UsageError& e) {
        err << "mkfib: " << e.what() << '\n';
        return kUsage;
    } catch (const VerificationError& e) {
        out.flush();
        err << "mkfib: verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::exception& e) {
        err << "mkfib: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kOk;
}

}  // namespace mkfib::cli
