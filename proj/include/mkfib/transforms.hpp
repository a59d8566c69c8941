#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mkfib/ring.hpp"
#include "mkfib/sequences.hpp"

namespace mkfib {

/// The four binomial-family transforms, by their weight w(n, i):
/// Binomial 1, KBinomial k^n, RisingK k^i, FallingK k^(n-i).
enum class TransformKind { Binomial, KBinomial, RisingK, FallingK };

inline constexpr std::array<TransformKind, 4> kAllKinds{TransformKind::Binomial, TransformKind::KBinomial,
                                                        TransformKind::RisingK, TransformKind::FallingK};

/// CLI spelling: binomial, kbinomial, rising, falling.
std::string_view name(TransformKind kind);
/// One-letter sequence symbol: B, W, R, F.
char symbol(TransformKind kind);
std::optional<TransformKind> parse_kind(std::string_view text);

/// How transform_direct evaluates sum_i C(n,i) w(n,i) M_{k,i}.
enum class DirectSumMethod {
    /// Binomials from a cached Pascal triangle (addition only), M from the
    /// shared prefix cache. Default; the audit's reference route.
    PascalRows,
    /// C(n,i+1) = C(n,i)(n-i)/(i+1) and M_{i+1} = k M_i + M_{i-1} advanced
    /// in lockstep; constant memory.
    Streamed,
    /// Same term ratios as Streamed, grouped by binary splitting over index
    /// ranges so the big multiplications are balanced. For large n.
    BinarySplit,
};

/// C(n, i), zero when i > n.
ExactInt binomial_coeff(Index n, Index i);
/// Row n of Pascal's triangle, built by addition only.
std::vector<ExactInt> pascal_row(Index n);
/// Row n built with the multiplicative recurrence.
std::vector<ExactInt> multiplicative_row(Index n);

/// Monotonically growing prefixes of M_{k,.}, keyed by (mode, k).
/// Safe for concurrent readers and extenders.
class MPrefixCache {
public:
    /// M_{k,0} .. M_{k,count-1}.
    std::vector<RingElem> prefix(const RingElem& k, std::size_t count);
    RingElem term(const RingElem& k, Index n);

    static MPrefixCache& shared();

private:
    std::mutex mu_;
    std::map<std::string, std::vector<RingElem>> cache_;
};

/// sum_{i=0}^{n} C(n,i) w(n,i) M_{k,i}, summed term by term.
RingElem transform_direct(TransformKind kind, const RingElem& k, Index n,
                          DirectSumMethod method = DirectSumMethod::PascalRows);

/// The closed second-order recurrence each transform satisfies.
Order2Rec transform_rec_spec(TransformKind kind, const RingElem& k);

/// Two independently computed sides of an identity.
struct IdentitySides {
    RingElem lhs;
    RingElem rhs;
    bool holds() const { return lhs == rhs; }
};

/// (b_{n+1} - b_n, sum C(n,i) M_{i+1})
IdentitySides binomial_diff_identity(const RingElem& k, Index n);
/// (f_{n+1} - k f_n, sum C(n,i) k^(n-i) M_{i+1})
IdentitySides falling_diff_identity(const RingElem& k, Index n);
/// (r_n, M_{2n})
IdentitySides rising_even_index(const RingElem& k, Index n);
/// (w_n, k^n b_n)
IdentitySides w_scaling(const RingElem& k, Index n);

}  // namespace mkfib
