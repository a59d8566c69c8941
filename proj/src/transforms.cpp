#include "mkfib/transforms.hpp"

#include <stdexcept>

#include "mat2.hpp"

namespace mkfib {

std::string_view name(TransformKind kind) {
    switch (kind) {
        case TransformKind::Binomial: return "binomial";
        case TransformKind::KBinomial: return "kbinomial";
        case TransformKind::RisingK: return "rising";
        case TransformKind::FallingK: return "falling";
    }
    throw std::logic_error("unknown transform kind");
}

char symbol(TransformKind kind) {
    switch (kind) {
        case TransformKind::Binomial: return 'B';
        case TransformKind::KBinomial: return 'W';
        case TransformKind::RisingK: return 'R';
        case TransformKind::FallingK: return 'F';
    }
    throw std::logic_error("unknown transform kind");
}

std::optional<TransformKind> parse_kind(std::string_view text) {
    for (auto kind : kAllKinds)
        if (name(kind) == text) return kind;
    return std::nullopt;
}

ExactInt binomial_coeff(Index n, Index i) {
    if (i > n) return ExactInt(0);
    if (i > n - i) i = n - i;
    ExactInt c(1);
    for (Index j = 0; j < i; ++j) c.mul_div_exact(n - j, j + 1);
    return c;
}

namespace {

class PascalTriangle {
public:
    std::vector<ExactInt> row(Index n) {
        std::lock_guard lock(mu_);
        if (rows_.empty()) rows_.push_back({ExactInt(1)});
        while (rows_.size() <= n) {
            const auto& prev = rows_.back();
            std::vector<ExactInt> next(prev.size() + 1, ExactInt(1));
            for (std::size_t i = 1; i < prev.size(); ++i) next[i] = prev[i - 1] + prev[i];
            rows_.push_back(std::move(next));
        }
        return rows_[n];
    }

private:
    std::mutex mu_;
    std::vector<std::vector<ExactInt>> rows_;
};

PascalTriangle& triangle() {
    static PascalTriangle t;
    return t;
}

std::string cache_key(const RingElem& k) { return to_string(k.mode()) + ":" + k.to_string(); }

RingElem lift(std::int64_t c, const RingElem& like) { return RingElem::constant(ExactInt(c), like.mode()); }

std::vector<RingElem> powers(const RingElem& k, Index n) {
    std::vector<RingElem> p;
    p.reserve(n + 1);
    p.push_back(lift(1, k));
    for (Index j = 1; j <= n; ++j) p.push_back(p.back() * k);
    return p;
}

// Cached M prefix, Pascal row, explicit weight table.
RingElem direct_cached(TransformKind kind, const RingElem& k, Index n) {
    auto m = MPrefixCache::shared().prefix(k, n + 1);
    auto row = triangle().row(n);
    auto pw = powers(k, n);
    RingElem sum = lift(0, k);
    for (Index i = 0; i <= n; ++i) {
        RingElem t = m[i] * row[i];
        switch (kind) {
            case TransformKind::Binomial: break;
            case TransformKind::KBinomial: t *= pw[n]; break;
            case TransformKind::RisingK: t *= pw[i]; break;
            case TransformKind::FallingK: t *= pw[n - i]; break;
        }
        sum += t;
    }
    return sum;
}

// O(1) live terms regardless of n. The falling kind walks
// i downward so its weight k^(n-i) can grow by repeated multiplication.
RingElem direct_streamed(TransformKind kind, const RingElem& k, Index n) {
    const RingElem one = lift(1, k);
    const RingElem kn = kind == TransformKind::KBinomial ? k.pow(n) : one;
    RingElem sum = lift(0, k);
    ExactInt c(1);  // C(n, j)
    RingElem weight = one;

    if (kind != TransformKind::FallingK) {
        RingElem m_prev = lift(2, k);  // M_{i}
        RingElem m_next = lift(2, k);  // M_{i+1}
        for (Index i = 0; i <= n; ++i) {
            RingElem t = m_prev * c;
            if (kind == TransformKind::KBinomial) t *= kn;
            if (kind == TransformKind::RisingK) t *= weight;
            sum += t;
            if (i == n) break;
            c.mul_div_exact(n - i, i + 1);
            if (kind == TransformKind::RisingK) weight *= k;
            RingElem m2 = k * m_next + m_prev;
            m_prev = std::move(m_next);
            m_next = std::move(m2);
        }
        return sum;
    }

    // M_n and M_{n+1}, then M_{i-1} = M_{i+1} - k M_i going down.
    RingElem hi = lift(2, k), lo = lift(2, k);  // hi = M_{i+1}, lo = M_i
    for (Index i = 0; i < n; ++i) {
        RingElem next = k * hi + lo;
        lo = std::move(hi);
        hi = std::move(next);
    }
    for (Index j = 0; j <= n; ++j) {  // i = n - j, C(n, i) = C(n, j)
        sum += lo * c * weight;
        if (j == n) break;
        c.mul_div_exact(n - j, j + 1);
        weight *= k;
        RingElem below = hi - k * lo;
        hi = std::move(lo);
        lo = std::move(below);
    }
    return sum;
}


// Binary splitting of sum_i (prod_{j<i} p_j/q_j) e1' A^i u0 with
// p_j = (n-j) rho, q_j = j+1, so the ratio product is C(n,i) rho^i.
// For a range [a,b):
//   P = prod p_j, Q = prod q_j, G = A^(b-a),
//   T = sum_{i=a}^{b-1} (prod_{a<=j<i} p_j)(prod_{i<=j<b} q_j) A^(i-a),
// merged as T = T1 Q2 + P1 G1 T2.
struct Split {
    RingElem P;
    ExactInt Q;
    detail::Mat2 T;
    detail::Mat2 G;
};

Split split(Index a, Index b, Index n, const RingElem& rho, const detail::Mat2& step) {
    if (b - a == 1) {
        const ExactInt q(static_cast<std::int64_t>(a + 1));
        const RingElem qe = RingElem::constant(q, rho.mode());
        auto T = detail::mat_scale(detail::mat_identity(rho.mode()), qe);
        return {rho * ExactInt(static_cast<std::int64_t>(n - a)), q, std::move(T), step};
    }
    const Index m = a + (b - a) / 2;
    Split lo = split(a, m, n, rho, step);
    Split hi = split(m, b, n, rho, step);
    const RingElem q2 = RingElem::constant(hi.Q, rho.mode());
    auto T = detail::mat_add(detail::mat_scale(lo.T, q2), detail::mat_mul(detail::mat_scale(lo.G, lo.P), hi.T));
    return {lo.P * hi.P, lo.Q * hi.Q, std::move(T), detail::mat_mul(lo.G, hi.G)};
}

RingElem direct_binary_split(TransformKind kind, const RingElem& k, Index n) {
    const RingElem zero = lift(0, k), one = lift(1, k), two = lift(2, k);
    detail::Mat2 step;
    RingElem u0, u1;
    if (kind == TransformKind::FallingK) {
        // Walk M downward: (M_{n-j}, M_{n-j-1}) -> (M_{n-j-1}, M_{n-j} - k M_{n-j-1}).
        RingElem hi = two, lo = two;  // M_{i+1}, M_i
        for (Index i = 0; i + 1 < n; ++i) {
            RingElem next = k * hi + lo;
            lo = std::move(hi);
            hi = std::move(next);
        }
        // now hi = M_n, lo = M_{n-1} (n >= 1)
        u0 = n == 0 ? two : hi;
        u1 = n == 0 ? two : lo;
        step = {zero, one, one, -k};
    } else {
        u0 = two;
        u1 = two;
        step = {zero, one, one, k};
    }
    const RingElem rho = kind == TransformKind::RisingK || kind == TransformKind::FallingK ? k : one;
    Split s = split(0, n + 1, n, rho, step);
    RingElem sum = (s.T[0] * u0 + s.T[1] * u1).exact_div_int(s.Q);
    // The k^n weight of the k-binomial transform is common to every term.
    if (kind == TransformKind::KBinomial) sum *= k.pow(n);
    return sum;
}

}  // namespace

std::vector<ExactInt> pascal_row(Index n) { return triangle().row(n); }

std::vector<ExactInt> multiplicative_row(Index n) {
    std::vector<ExactInt> row;
    row.reserve(n + 1);
    ExactInt c(1);
    for (Index i = 0; i <= n; ++i) {
        row.push_back(c);
        if (i < n) c.mul_div_exact(n - i, i + 1);
    }
    return row;
}

std::vector<RingElem> MPrefixCache::prefix(const RingElem& k, std::size_t count) {
    std::lock_guard lock(mu_);
    auto& seq = cache_[cache_key(k)];
    if (seq.size() < 2) seq = terms(modified_k_fib_spec(k), 2);
    while (seq.size() < count) seq.push_back(k * seq[seq.size() - 1] + seq[seq.size() - 2]);
    return {seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(count)};
}

RingElem MPrefixCache::term(const RingElem& k, Index n) { return prefix(k, n + 1)[n]; }

MPrefixCache& MPrefixCache::shared() {
    static MPrefixCache cache;
    return cache;
}

RingElem transform_direct(TransformKind kind, const RingElem& k, Index n, DirectSumMethod method) {
    require_valid_k(k);
    switch (method) {
        case DirectSumMethod::PascalRows: return direct_cached(kind, k, n);
        case DirectSumMethod::Streamed: return direct_streamed(kind, k, n);
        case DirectSumMethod::BinarySplit: return direct_binary_split(kind, k, n);
    }
    throw std::logic_error("unknown direct-sum method");
}

Order2Rec transform_rec_spec(TransformKind kind, const RingElem& k) {
    require_valid_k(k);
    const RingElem two = lift(2, k);
    std::string label(1, symbol(kind));
    switch (kind) {
        case TransformKind::Binomial:
            return {k + two, -k, two, lift(4, k), label};
        case TransformKind::KBinomial:
            return {k * (k + two), -k.pow(3), two, k * ExactInt(4), label};
        case TransformKind::RisingK:
            return {k * k + two, lift(-1, k), two, k * ExactInt(2) + two, label};
        case TransformKind::FallingK:
            return {k * ExactInt(3), -(k * k * ExactInt(2) - lift(1, k)), two, k * ExactInt(2) + two, label};
    }
    throw std::logic_error("unknown transform kind");
}

IdentitySides binomial_diff_identity(const RingElem& k, Index n) {
    RingElem lhs = transform_direct(TransformKind::Binomial, k, n + 1) - transform_direct(TransformKind::Binomial, k, n);
    auto m = MPrefixCache::shared().prefix(k, n + 2);
    auto row = pascal_row(n);
    RingElem rhs = lift(0, k);
    for (Index i = 0; i <= n; ++i) rhs += m[i + 1] * row[i];
    return {std::move(lhs), std::move(rhs)};
}

IdentitySides falling_diff_identity(const RingElem& k, Index n) {
    RingElem lhs =
        transform_direct(TransformKind::FallingK, k, n + 1) - k * transform_direct(TransformKind::FallingK, k, n);
    auto m = MPrefixCache::shared().prefix(k, n + 2);
    auto row = pascal_row(n);
    RingElem rhs = lift(0, k);
    for (Index i = 0; i <= n; ++i) rhs += m[i + 1] * row[i] * k.pow(n - i);
    return {std::move(lhs), std::move(rhs)};
}

IdentitySides rising_even_index(const RingElem& k, Index n) {
    auto m = terms(modified_k_fib_spec(k), 2 * n + 1);
    return {transform_direct(TransformKind::RisingK, k, n), m[2 * n]};
}

IdentitySides w_scaling(const RingElem& k, Index n) {
    return {transform_direct(TransformKind::KBinomial, k, n),
            k.pow(n) * transform_direct(TransformKind::Binomial, k, n)};
}

}  // namespace mkfib
