#include "suninv/tableaux.hpp"

#include "suninv/errors.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace suninv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
    int k = 0;
    for (const auto& row : rows_) k += static_cast<int>(row.size());
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw std::invalid_argument("StandardTableau: empty row");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw std::invalid_argument("StandardTableau: row lengths must weakly decrease");
        for (std::size_t c = 0; c < row.size(); ++c) {
            int v = row[c];
            if (v < 1 || v > k || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("StandardTableau: entries must be exactly {1..k}");
            seen[static_cast<std::size_t>(v - 1)] = true;
            if (c > 0 && row[c - 1] >= v)
                throw std::invalid_argument("StandardTableau: rows must strictly increase");
            if (r > 0 && rows_[r - 1][c] >= v)
                throw std::invalid_argument("StandardTableau: columns must strictly increase");
        }
    }
}

Partition StandardTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition{std::move(parts)};
}

int StandardTableau::size() const {
    int k = 0;
    for (const auto& row : rows_) k += static_cast<int>(row.size());
    return k;
}

std::string StandardTableau::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << "; ";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) os << ' ';
            os << rows_[r][c];
        }
    }
    return os.str();
}

StandardTableau StandardTableau::from_string(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t split = text.find(';', pos);
        std::string_view chunk =
            text.substr(pos, split == std::string_view::npos ? split : split - pos);
        std::vector<int> row;
        std::istringstream is{std::string(chunk)};
        int v;
        while (is >> v) row.push_back(v);
        if (!is.eof()) throw parse_error("tableau: invalid entry", pos);
        if (row.empty()) throw parse_error("tableau: empty row", pos);
        rows.push_back(std::move(row));
        if (split == std::string_view::npos) break;
        pos = split + 1;
    }
    return StandardTableau{std::move(rows)};
}

namespace {

void partitions_descending(int remaining, int max_part, int rows_left,
                           std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (rows_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_descending(remaining - part, part, rows_left - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int k, std::optional<int> max_rows) {
    if (k < 0) throw std::invalid_argument("enumerate_partitions: negative k");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_descending(k, k, max_rows.value_or(k), prefix, out);
    return out;
}

BigInt hook_count(const Partition& shape) {
    const auto& parts = shape.parts();
    const int k = shape.size();

    // Column lengths, for the leg of each hook.
    std::vector<int> col_len(parts.empty() ? 0 : static_cast<std::size_t>(parts[0]), 0);
    for (int len : parts)
        for (int c = 0; c < len; ++c) ++col_len[static_cast<std::size_t>(c)];

    BigInt numerator{1};
    for (int i = 2; i <= k; ++i) numerator *= BigInt{i};
    BigInt hooks{1};
    for (std::size_t r = 0; r < parts.size(); ++r) {
        for (int c = 0; c < parts[r]; ++c) {
            int arm = parts[r] - c - 1;
            int leg = col_len[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
            hooks *= BigInt{arm + leg + 1};
        }
    }
    return numerator / hooks;
}

namespace {

void fill_syt(const std::vector<int>& shape, std::vector<std::vector<int>>& rows,
              int next_entry, int k, std::vector<StandardTableau>& out) {
    if (next_entry > k) {
        out.emplace_back(rows);
        return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
        std::size_t filled = rows[r].size();
        if (filled == static_cast<std::size_t>(shape[r])) continue;
        if (r > 0 && rows[r - 1].size() <= filled) continue; // column would break
        rows[r].push_back(next_entry);
        fill_syt(shape, rows, next_entry + 1, k, out);
        rows[r].pop_back();
    }
}

} // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape, int cap) {
    const int k = shape.size();
    if (k > cap)
        throw capacity_error("enumerate_syt: shape size " + std::to_string(k) +
                             " exceeds the enumeration cap " + std::to_string(cap));
    if (k == 0) return {StandardTableau{}};
    std::vector<std::vector<int>> rows(shape.parts().size());
    std::vector<StandardTableau> out;
    fill_syt(shape.parts(), rows, 1, k, out);
    return out;
}

BigInt syt_total(int k, std::optional<int> max_rows) {
    BigInt total;
    for (const Partition& shape : enumerate_partitions(k, max_rows))
        total += hook_count(shape);
    return total;
}

BigInt syt_square_total(int k, std::optional<int> max_rows) {
    BigInt total;
    for (const Partition& shape : enumerate_partitions(k, max_rows)) {
        BigInt f = hook_count(shape);
        total += f * f;
    }
    return total;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

std::ostream& operator<<(std::ostream& os, const StandardTableau& t) {
    return os << t.to_string();
}

} // namespace suninv
