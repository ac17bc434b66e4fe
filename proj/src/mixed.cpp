#include "suninv/mixed.hpp"

#include "suninv/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace suninv {

namespace {

Strand canonical(Leg a, Leg b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

std::string leg_text(const Leg& leg) {
    return (leg.side == Side::Right ? "R" : "L") + std::to_string(leg.height);
}

} // namespace

MixedDiagram::MixedDiagram(MixedShape shape, std::vector<Strand> strands)
    : shape_(shape) {
    if (shape.m < 0 || shape.n < 0)
        throw std::invalid_argument("MixedDiagram: negative slot counts");
    const int total = shape.total();
    if (static_cast<int>(strands.size()) != total)
        throw std::invalid_argument("MixedDiagram: expected m+n strands");

    strands_.reserve(strands.size());
    for (const auto& [a, b] : strands) strands_.push_back(canonical(a, b));
    std::sort(strands_.begin(), strands_.end());

    std::vector<bool> used(static_cast<std::size_t>(2 * total), false);
    auto mark = [&](const Leg& leg) {
        if (leg.height < 1 || leg.height > total)
            throw std::invalid_argument("MixedDiagram: leg height out of range");
        std::size_t slot = static_cast<std::size_t>(leg.height - 1) +
                           (leg.side == Side::Left ? static_cast<std::size_t>(total) : 0);
        if (used[slot]) throw std::invalid_argument("MixedDiagram: leg used twice");
        used[slot] = true;
    };
    for (const auto& [a, b] : strands_) {
        mark(a);
        mark(b);
        if (is_tail(a) == is_tail(b))
            throw std::invalid_argument(
                "MixedDiagram: strand must join an arrow tail to an arrow head");
    }
}

std::string MixedDiagram::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < strands_.size(); ++i) {
        if (i) os << ',';
        os << leg_text(strands_[i].first) << '-' << leg_text(strands_[i].second);
    }
    return os.str();
}

MixedDiagram MixedDiagram::from_string(std::string_view text, MixedShape shape) {
    auto parse_leg = [&](std::string_view token, std::size_t at) -> Leg {
        if (token.empty() || (token[0] != 'R' && token[0] != 'L'))
            throw parse_error("diagram: leg must start with R or L", at);
        int height = 0;
        if (token.size() < 2) throw parse_error("diagram: missing leg height", at);
        for (std::size_t i = 1; i < token.size(); ++i) {
            if (token[i] < '0' || token[i] > '9')
                throw parse_error("diagram: invalid leg height", at + i);
            height = height * 10 + (token[i] - '0');
        }
        return Leg{token[0] == 'R' ? Side::Right : Side::Left, height};
    };

    std::vector<Strand> strands;
    std::size_t pos = 0;
    if (!text.empty()) {
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view pair_text =
                text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            std::size_t dash = pair_text.find('-');
            if (dash == std::string_view::npos)
                throw parse_error("diagram: strand must be <leg>-<leg>", pos);
            strands.push_back(canonical(parse_leg(pair_text.substr(0, dash), pos),
                                        parse_leg(pair_text.substr(dash + 1), pos + dash + 1)));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return MixedDiagram{shape, std::move(strands)};
}

MixedDiagram swap_map(const Permutation& a, MixedShape shape) {
    if (a.degree() != shape.total())
        throw degree_mismatch("swap_map: permutation degree differs from m+n");
    auto dualize = [&](Leg leg) {
        if (leg.height > shape.m)
            leg.side = leg.side == Side::Right ? Side::Left : Side::Right;
        return leg;
    };
    std::vector<Strand> strands;
    strands.reserve(static_cast<std::size_t>(a.degree()));
    for (int j = 1; j <= a.degree(); ++j)
        strands.push_back(canonical(dualize(Leg{Side::Right, j}),
                                    dualize(Leg{Side::Left, a(j)})));
    return MixedDiagram{shape, std::move(strands)};
}

Permutation unswap_map(const MixedDiagram& d) {
    const MixedShape& shape = d.shape();
    auto dualize = [&](Leg leg) {
        if (leg.height > shape.m)
            leg.side = leg.side == Side::Right ? Side::Left : Side::Right;
        return leg;
    };
    std::vector<int> images(static_cast<std::size_t>(shape.total()));
    for (const auto& [a, b] : d.strands()) {
        Leg first = dualize(a);
        Leg second = dualize(b);
        if (first.side == second.side)
            throw std::invalid_argument("unswap_map: diagram is not in the image of swap_map");
        const Leg& right = first.side == Side::Right ? first : second;
        const Leg& left = first.side == Side::Right ? second : first;
        images[static_cast<std::size_t>(right.height - 1)] = left.height;
    }
    return Permutation{std::move(images)};
}

std::vector<MixedDiagram> enumerate_mixed(MixedShape shape, int cap) {
    std::vector<MixedDiagram> out;
    for_each_permutation(
        shape.total(), [&](const Permutation& p) { out.push_back(swap_map(p, shape)); },
        cap);
    return out;
}

MixedDiagram mirror(const MixedDiagram& d) {
    auto flip = [](Leg leg) {
        leg.side = leg.side == Side::Right ? Side::Left : Side::Right;
        return leg;
    };
    std::vector<Strand> strands;
    strands.reserve(d.strands().size());
    for (const auto& [a, b] : d.strands()) strands.push_back(canonical(flip(a), flip(b)));
    return MixedDiagram{d.shape(), std::move(strands)};
}

bool is_hermitian(const MixedDiagram& d) { return mirror(d) == d; }

namespace {

// Node ids for path tracing through a glued pair of diagrams: result-left
// legs, result-right legs, then the glued middle layer.
struct GlueNodes {
    int total;
    int outer_left(int h) const { return h - 1; }
    int outer_right(int h) const { return total + h - 1; }
    int middle(int h) const { return 2 * total + h - 1; }
    int count() const { return 3 * total; }
};

} // namespace

MixedProduct compose(const MixedDiagram& a, const MixedDiagram& b) {
    if (a.shape() != b.shape())
        throw degree_mismatch("compose: diagrams live on different shapes");
    const int total = a.shape().total();
    GlueNodes ids{total};

    // Each node carries at most two incident strand endpoints; middle nodes
    // have exactly one from a and one from b.
    std::vector<int> via_a(static_cast<std::size_t>(ids.count()), -1);
    std::vector<int> via_b(static_cast<std::size_t>(ids.count()), -1);

    auto a_node = [&](const Leg& leg) {
        return leg.side == Side::Left ? ids.outer_left(leg.height) : ids.middle(leg.height);
    };
    auto b_node = [&](const Leg& leg) {
        return leg.side == Side::Right ? ids.outer_right(leg.height) : ids.middle(leg.height);
    };
    for (const auto& [x, y] : a.strands()) {
        via_a[static_cast<std::size_t>(a_node(x))] = a_node(y);
        via_a[static_cast<std::size_t>(a_node(y))] = a_node(x);
    }
    for (const auto& [x, y] : b.strands()) {
        via_b[static_cast<std::size_t>(b_node(x))] = b_node(y);
        via_b[static_cast<std::size_t>(b_node(y))] = b_node(x);
    }

    auto leg_of = [&](int node) -> Leg {
        if (node < total) return Leg{Side::Left, node + 1};
        return Leg{Side::Right, node - total + 1};
    };
    auto is_outer = [&](int node) { return node < 2 * total; };

    std::vector<bool> visited(static_cast<std::size_t>(ids.count()), false);
    std::vector<Strand> result_strands;

    // Open paths: start from each outer node and walk to the far end,
    // alternating between a-strands and b-strands at the middle layer.
    for (int start = 0; start < 2 * total; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        visited[static_cast<std::size_t>(start)] = true;
        bool use_a = via_a[static_cast<std::size_t>(start)] >= 0;
        int node = start;
        while (true) {
            int next = use_a ? via_a[static_cast<std::size_t>(node)]
                             : via_b[static_cast<std::size_t>(node)];
            visited[static_cast<std::size_t>(next)] = true;
            if (is_outer(next)) {
                result_strands.push_back(canonical(leg_of(start), leg_of(next)));
                break;
            }
            node = next;
            use_a = !use_a;
        }
    }

    // Whatever middle nodes remain untouched form closed loops.
    int loops = 0;
    for (int start = 2 * total; start < ids.count(); ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        ++loops;
        int node = start;
        bool use_a = true;
        while (!visited[static_cast<std::size_t>(node)]) {
            visited[static_cast<std::size_t>(node)] = true;
            node = use_a ? via_a[static_cast<std::size_t>(node)]
                         : via_b[static_cast<std::size_t>(node)];
            use_a = !use_a;
        }
    }

    return MixedProduct{loops, MixedDiagram{a.shape(), std::move(result_strands)}};
}

int close_trace(const MixedDiagram& d) {
    const int total = d.shape().total();
    // Joining L_h to R_h merges each height into one node; every node then
    // has degree exactly two, so the strand graph is a disjoint union of
    // cycles.
    std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(total));
    for (const auto& [x, y] : d.strands()) {
        adjacent[static_cast<std::size_t>(x.height - 1)].push_back(y.height - 1);
        adjacent[static_cast<std::size_t>(y.height - 1)].push_back(x.height - 1);
    }
    std::vector<bool> seen(static_cast<std::size_t>(total), false);
    int loops = 0;
    for (int start = 0; start < total; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++loops;
        std::vector<int> stack{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (!stack.empty()) {
            int node = stack.back();
            stack.pop_back();
            for (int next : adjacent[static_cast<std::size_t>(node)]) {
                if (!seen[static_cast<std::size_t>(next)]) {
                    seen[static_cast<std::size_t>(next)] = true;
                    stack.push_back(next);
                }
            }
        }
    }
    return loops;
}

BigInt mixed_inner_product(const MixedDiagram& a, const MixedDiagram& b, int n_dim) {
    MixedProduct product = compose(mirror(a), b);
    int loops = product.loops + close_trace(product.result);
    return BigInt::pow(BigInt{n_dim}, static_cast<unsigned long>(loops));
}

Matrix<Rational> dense_mixed_operator(const MixedDiagram& d, int n_dim, long dense_budget) {
    const int total = d.shape().total();
    long dim = 1;
    for (int i = 0; i < total; ++i) {
        dim *= n_dim;
        if (dim > dense_budget)
            throw capacity_error("dense_mixed_operator: N^(m+n) exceeds the dense budget " +
                                 std::to_string(dense_budget));
    }

    Matrix<Rational> out(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    std::vector<int> left(static_cast<std::size_t>(total), 0);
    std::vector<int> right(static_cast<std::size_t>(total), 0);
    auto digit = [&](const Leg& leg) {
        return leg.side == Side::Left ? left[static_cast<std::size_t>(leg.height - 1)]
                                      : right[static_cast<std::size_t>(leg.height - 1)];
    };
    for (long row = 0; row < dim; ++row) {
        long rest = row;
        for (int t = total - 1; t >= 0; --t) {
            left[static_cast<std::size_t>(t)] = static_cast<int>(rest % n_dim);
            rest /= n_dim;
        }
        for (long col = 0; col < dim; ++col) {
            rest = col;
            for (int t = total - 1; t >= 0; --t) {
                right[static_cast<std::size_t>(t)] = static_cast<int>(rest % n_dim);
                rest /= n_dim;
            }
            bool match = true;
            for (const auto& [x, y] : d.strands()) {
                if (digit(x) != digit(y)) {
                    match = false;
                    break;
                }
            }
            if (match) out(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
                Rational{1};
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MixedDiagram& d) {
    return os << d.to_string();
}

} // namespace suninv
