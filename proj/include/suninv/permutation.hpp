#ifndef SUNINV_PERMUTATION_HPP
#define SUNINV_PERMUTATION_HPP

#include "suninv/bigint.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace suninv {

/// Permutations above this degree are refused by the enumeration routines
/// unless the caller raises the cap explicitly (10! is ~3.6M elements).
inline constexpr int kDefaultEnumerationCap = 10;

/// A permutation of {1..k} in one-line notation, stored as the image list
/// images[i-1] = rho(i). Immutable value type; the empty permutation (k = 0)
/// is the identity of S_0.
class Permutation {
public:
    Permutation() = default;

    /// Validates that images is a bijection of {1..k}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }

    /// rho(i) for 1-based i.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& images() const { return images_; }

    bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }
    bool operator!=(const Permutation& rhs) const { return images_ != rhs.images_; }
    /// Lexicographic on one-line notation; the order used everywhere an
    /// enumeration or a canonical representative is needed.
    bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

private:
    std::vector<int> images_;
};

/// Weakly decreasing cycle lengths of a permutation; a partition of k.
struct CycleType {
    std::vector<int> parts;
};

/// c(i) = a(b(i)): the right factor acts first. Throws degree_mismatch if the
/// degrees differ.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& a);

/// Number of cycles including fixed points; equals k only for the identity.
int cycle_count(const Permutation& a);

CycleType cycle_type(const Permutation& a);

/// True iff all cycle lengths are <= 2, equivalently a == inverse(a).
bool is_involution(const Permutation& a);

/// All of S_k in lexicographic one-line order (k! elements).
/// Throws capacity_error when k exceeds the cap.
std::vector<Permutation> enumerate_group(int k, int cap = kDefaultEnumerationCap);

/// Streaming variant of enumerate_group; same order, nothing materialized.
void for_each_permutation(int k, const std::function<void(const Permutation&)>& visit,
                          int cap = kDefaultEnumerationCap);

enum class InvolutionMethod { Brute, Recurrence };

/// Number of involutions in S_k. Brute counts over the full enumeration;
/// Recurrence uses I(k) = I(k-1) + (k-1) I(k-2) and has no cap.
BigInt involution_count(int k, InvolutionMethod method,
                        int cap = kDefaultEnumerationCap);

/// Accepts one-line ("3 1 2") or cycle ("(134)(25)") notation. For cycle
/// notation the degree parameter supplies trailing fixed points; when absent
/// the degree is the largest element mentioned. Throws parse_error.
Permutation parse_permutation(std::string_view text,
                              std::optional<int> degree = std::nullopt);

enum class PermNotation { OneLine, Cycles };

/// Inverse of parse_permutation on canonical forms. Cycle output omits fixed
/// points, each cycle starts at its smallest element, cycles are ordered by
/// smallest element, and the identity renders as "()".
std::string format_permutation(const Permutation& a,
                               PermNotation notation = PermNotation::OneLine);

std::ostream& operator<<(std::ostream& os, const Permutation& a);

} // namespace suninv

#endif // SUNINV_PERMUTATION_HPP
