#include "suninv/rs.hpp"

#include <algorithm>
#include <stdexcept>

namespace suninv {

TableauPair::TableauPair(StandardTableau p_in, StandardTableau q_in)
    : p(std::move(p_in)), q(std::move(q_in)) {
    if (p.shape() != q.shape())
        throw std::invalid_argument("TableauPair: P and Q must have the same shape");
}

std::string TableauPair::to_string() const {
    return "P=" + p.to_string() + " | Q=" + q.to_string();
}

TableauPair rs_map(const Permutation& rho) {
    std::vector<std::vector<int>> p_rows, q_rows;
    for (int t = 1; t <= rho.degree(); ++t) {
        int value = rho(t);
        std::size_t r = 0;
        // Bump down the rows until the value can sit at the end of one.
        while (r < p_rows.size()) {
            auto& row = p_rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), value);
            if (it == row.end()) break;
            std::swap(*it, value);
            ++r;
        }
        if (r == p_rows.size()) {
            p_rows.emplace_back();
            q_rows.emplace_back();
        }
        p_rows[r].push_back(value);
        q_rows[r].push_back(t);
    }
    return TableauPair{StandardTableau{std::move(p_rows)},
                       StandardTableau{std::move(q_rows)}};
}

Permutation rs_inverse(const TableauPair& pair) {
    std::vector<std::vector<int>> p_rows = pair.p.rows();
    const auto& q_rows = pair.q.rows();
    const int k = pair.p.size();

    // Position of each recording entry t, for removal in the order k..1.
    std::vector<std::size_t> row_of(static_cast<std::size_t>(k) + 1);
    for (std::size_t r = 0; r < q_rows.size(); ++r)
        for (int entry : q_rows[r]) row_of[static_cast<std::size_t>(entry)] = r;

    std::vector<int> images(static_cast<std::size_t>(k));
    for (int t = k; t >= 1; --t) {
        std::size_t r = row_of[static_cast<std::size_t>(t)];
        int value = p_rows[r].back();
        p_rows[r].pop_back();
        if (p_rows[r].empty()) p_rows.pop_back();
        // Reverse bumping: push the value back up through the rows above.
        while (r-- > 0) {
            auto& row = p_rows[r];
            auto it = std::lower_bound(row.begin(), row.end(), value);
            --it; // largest entry smaller than value; exists by construction
            std::swap(*it, value);
        }
        images[static_cast<std::size_t>(t - 1)] = value;
    }
    return Permutation{std::move(images)};
}

bool check_schuetzenberger(int k, int cap) {
    bool ok = true;
    for_each_permutation(
        k,
        [&](const Permutation& rho) {
            if (!ok) return;
            TableauPair forward = rs_map(rho);
            TableauPair backward = rs_map(inverse(rho));
            ok = backward.p == forward.q && backward.q == forward.p;
        },
        cap);
    return ok;
}

std::vector<Permutation> diagonal_permutations(int k, int cap) {
    std::vector<Permutation> out;
    for_each_permutation(
        k,
        [&](const Permutation& rho) {
            TableauPair pair = rs_map(rho);
            if (pair.p == pair.q) out.push_back(rho);
        },
        cap);
    return out;
}

} // namespace suninv
