#ifndef SUNINV_TABLEAUX_HPP
#define SUNINV_TABLEAUX_HPP

#include "suninv/bigint.hpp"
#include "suninv/permutation.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace suninv {

/// Shape of a Young diagram: weakly decreasing positive row lengths.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const; // number of boxes
    int rows() const { return static_cast<int>(parts_.size()); }

    bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }
    bool operator!=(const Partition& rhs) const { return parts_ != rhs.parts_; }

    std::string to_string() const; // "(4,2,2,1)"

private:
    std::vector<int> parts_;
};

/// Standard Young tableau in English notation: entries are exactly {1..k},
/// strictly increasing along rows and down columns.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int size() const;

    bool operator==(const StandardTableau& rhs) const { return rows_ == rhs.rows_; }
    bool operator!=(const StandardTableau& rhs) const { return rows_ != rhs.rows_; }
    bool operator<(const StandardTableau& rhs) const { return rows_ < rhs.rows_; }

    /// "1 3 4 9; 2 7; 5 8; 6"
    std::string to_string() const;
    static StandardTableau from_string(std::string_view text);

private:
    std::vector<std::vector<int>> rows_;
};

/// All partitions of k with at most max_rows parts (all of them when
/// max_rows is absent), in reverse-lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> enumerate_partitions(int k,
                                            std::optional<int> max_rows = std::nullopt);

/// f_lambda = k! / (product of hook lengths): the number of standard Young
/// tableaux of the given shape.
BigInt hook_count(const Partition& shape);

/// All standard tableaux of the given shape, deterministic order (entries
/// placed in increasing row index at every step). Throws capacity_error
/// when the shape has more boxes than the cap.
std::vector<StandardTableau> enumerate_syt(const Partition& shape,
                                           int cap = kDefaultEnumerationCap);

/// Sum of hook_count over enumerate_partitions(k, max_rows); the number of
/// standard Young tableaux with k boxes and at most max_rows rows.
BigInt syt_total(int k, std::optional<int> max_rows = std::nullopt);

/// Sum of hook_count squared; equals k! when max_rows is absent.
BigInt syt_square_total(int k, std::optional<int> max_rows = std::nullopt);

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const StandardTableau& t);

} // namespace suninv

#endif // SUNINV_TABLEAUX_HPP
