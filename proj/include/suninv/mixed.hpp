#ifndef SUNINV_MIXED_HPP
#define SUNINV_MIXED_HPP

#include "suninv/bigint.hpp"
#include "suninv/exact_matrix.hpp"
#include "suninv/permutation.hpp"
#include "suninv/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace suninv {

/// Slot layout of V^(tensor m) x (V*)^(tensor n): heights 1..m carry
/// fundamental factors, heights m+1..m+n the dualized ones.
struct MixedShape {
    int m = 0;
    int n = 0;

    int total() const { return m + n; }
    bool operator==(const MixedShape& rhs) const { return m == rhs.m && n == rhs.n; }
    bool operator!=(const MixedShape& rhs) const { return !(*this == rhs); }
};

/// Right sorts before Left so the canonical strand order matches the text
/// encoding "R1-L1,R2-R3,L2-L3".
enum class Side { Right = 0, Left = 1 };

struct Leg {
    Side side = Side::Right;
    int height = 1;

    bool operator==(const Leg& rhs) const {
        return side == rhs.side && height == rhs.height;
    }
    bool operator<(const Leg& rhs) const {
        if (side != rhs.side) return side < rhs.side;
        return height < rhs.height;
    }
};

using Strand = std::pair<Leg, Leg>; // canonical: first < second

/// A primitive invariant on the mixed space: a perfect matching of arrow
/// tails to arrow heads. Tails are Right legs at fundamental heights and
/// Left legs at dualized heights; heads are the complementary set. The
/// constructor canonicalizes the strand list and validates the matching.
class MixedDiagram {
public:
    MixedDiagram() = default;
    MixedDiagram(MixedShape shape, std::vector<Strand> strands);

    const MixedShape& shape() const { return shape_; }
    const std::vector<Strand>& strands() const { return strands_; }

    bool operator==(const MixedDiagram& rhs) const {
        return shape_ == rhs.shape_ && strands_ == rhs.strands_;
    }
    bool operator!=(const MixedDiagram& rhs) const { return !(*this == rhs); }
    bool operator<(const MixedDiagram& rhs) const { return strands_ < rhs.strands_; }

    bool is_tail(const Leg& leg) const {
        return (leg.side == Side::Right) == (leg.height <= shape_.m);
    }

    /// "R1-L1,R2-R3,L2-L3"
    std::string to_string() const;
    static MixedDiagram from_string(std::string_view text, MixedShape shape);

private:
    MixedShape shape_;
    std::vector<Strand> strands_;
};

/// Endpoint-swap bijection S_(m+n) -> S_(m,n): start from the permutation
/// birdtrack {(Right,j)-(Left,a(j))} and flip the side of every endpoint at
/// a dualized height.
MixedDiagram swap_map(const Permutation& a, MixedShape shape);

/// Inverse of swap_map: flip dualized-height endpoints back and read off the
/// permutation. Only valid on diagrams (all are in the image of swap_map).
Permutation unswap_map(const MixedDiagram& d);

/// All (m+n)! diagrams, in the order inherited from enumerate_group.
std::vector<MixedDiagram> enumerate_mixed(MixedShape shape,
                                          int cap = kDefaultEnumerationCap);

/// Reflection about the vertical axis: every leg changes side. Realizes the
/// Hermitian conjugate of the diagram under <A|B> = tr(A^dagger B).
MixedDiagram mirror(const MixedDiagram& d);

/// True iff the birdtrack is symmetric under mirror reflection.
bool is_hermitian(const MixedDiagram& d);

struct MixedProduct {
    int loops = 0;
    MixedDiagram result;
};

/// Diagram composition a after b: glue a's Right legs to b's Left legs at
/// equal heights and trace the strands through. The algebra product equals
/// N^loops times the returned diagram. Throws degree_mismatch on shape
/// mismatch.
MixedProduct compose(const MixedDiagram& a, const MixedDiagram& b);

/// Number of closed loops after joining Left and Right legs of equal height;
/// the trace of the diagram is N^(returned value).
int close_trace(const MixedDiagram& d);

/// <a|b> = tr(mirror(a) b) = N^(loops from composition + loops from closure).
BigInt mixed_inner_product(const MixedDiagram& a, const MixedDiagram& b, int n_dim);

/// Dense Kronecker-delta matrix of the diagram on (C^N)^(tensor (m+n)):
/// rows are flattened left multi-indices, columns right ones, and each
/// strand contributes a delta between its two endpoint indices.
Matrix<Rational> dense_mixed_operator(const MixedDiagram& d, int n_dim,
                                      long dense_budget = 4096);

std::ostream& operator<<(std::ostream& os, const MixedDiagram& d);

} // namespace suninv

#endif // SUNINV_MIXED_HPP
