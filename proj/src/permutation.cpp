#include "suninv/permutation.hpp"

#include "suninv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace suninv {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    const int k = degree();
    for (int v : images_) {
        if (v < 1 || v > k || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Permutation: image list is not a bijection of {1..k}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    return Permutation{std::move(images)};
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw degree_mismatch("compose: degrees " + std::to_string(a.degree()) + " and " +
                              std::to_string(b.degree()) + " differ");
    const int k = a.degree();
    std::vector<int> images(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) images[static_cast<std::size_t>(i - 1)] = a(b(i));
    return Permutation{std::move(images)};
}

Permutation inverse(const Permutation& a) {
    const int k = a.degree();
    std::vector<int> images(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) images[static_cast<std::size_t>(a(i) - 1)] = i;
    return Permutation{std::move(images)};
}

CycleType cycle_type(const Permutation& a) {
    const int k = a.degree();
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    std::vector<int> parts;
    for (int i = 1; i <= k; ++i) {
        if (seen[static_cast<std::size_t>(i - 1)]) continue;
        int length = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = a(j)) {
            seen[static_cast<std::size_t>(j - 1)] = true;
            ++length;
        }
        parts.push_back(length);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return CycleType{std::move(parts)};
}

int cycle_count(const Permutation& a) {
    return static_cast<int>(cycle_type(a).parts.size());
}

bool is_involution(const Permutation& a) {
    const int k = a.degree();
    for (int i = 1; i <= k; ++i) {
        if (a(a(i)) != i) return false;
    }
    return true;
}

namespace {

void check_cap(int k, int cap) {
    if (k < 0) throw std::invalid_argument("enumerate: negative degree");
    if (k > cap)
        throw capacity_error("enumerate: k = " + std::to_string(k) +
                             " exceeds the enumeration cap " + std::to_string(cap));
}

} // namespace

void for_each_permutation(int k, const std::function<void(const Permutation&)>& visit,
                          int cap) {
    check_cap(k, cap);
    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 1);
    do {
        visit(Permutation{images});
    } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<Permutation> enumerate_group(int k, int cap) {
    std::vector<Permutation> out;
    for_each_permutation(
        k, [&](const Permutation& p) { out.push_back(p); }, cap);
    return out;
}

BigInt involution_count(int k, InvolutionMethod method, int cap) {
    if (k < 0) throw std::invalid_argument("involution_count: negative degree");
    if (method == InvolutionMethod::Brute) {
        BigInt count;
        for_each_permutation(
            k,
            [&](const Permutation& p) {
                if (is_involution(p)) count += BigInt::one();
            },
            cap);
        return count;
    }
    // I(k) = I(k-1) + (k-1) I(k-2)
    BigInt prev2{1}, prev1{1}; // I(0), I(1)
    if (k == 0) return prev2;
    for (int i = 2; i <= k; ++i) {
        BigInt cur = prev1 + BigInt{i - 1} * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

namespace {

void skip_spaces(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
}

int parse_int(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw parse_error("permutation: expected an integer", start);
    int value = 0;
    for (std::size_t i = start; i < pos; ++i) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000000) throw parse_error("permutation: entry out of range", start);
    }
    return value;
}

// One parenthesized cycle. "(134)" is the compact form, one digit per
// element; anything containing spaces or commas is read as separated
// multi-digit entries, e.g. "(1 13 4)".
std::vector<int> parse_one_cycle(std::string_view body, std::size_t offset) {
    std::vector<int> cycle;
    if (body.find(' ') == std::string_view::npos &&
        body.find(',') == std::string_view::npos) {
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (body[i] < '1' || body[i] > '9')
                throw parse_error("permutation: expected a digit 1-9 in compact cycle",
                                  offset + i);
            cycle.push_back(body[i] - '0');
        }
        return cycle;
    }
    std::size_t pos = 0;
    while (pos < body.size()) {
        skip_spaces(body, pos);
        if (pos == body.size()) break;
        std::size_t entry_at = pos;
        int v = parse_int(body, pos);
        if (v < 1) throw parse_error("permutation: entries are 1-based", offset + entry_at);
        cycle.push_back(v);
        skip_spaces(body, pos);
        if (pos < body.size() && body[pos] == ',') ++pos;
    }
    return cycle;
}

Permutation parse_cycles(std::string_view text, std::optional<int> degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    int max_entry = 0;
    while (pos < text.size()) {
        skip_spaces(text, pos);
        if (pos == text.size()) break;
        if (text[pos] != '(') throw parse_error("permutation: expected '('", pos);
        std::size_t open = pos++;
        std::size_t close = text.find(')', pos);
        if (close == std::string_view::npos)
            throw parse_error("permutation: unterminated cycle", open);
        std::vector<int> cycle = parse_one_cycle(text.substr(pos, close - pos), pos);
        for (int v : cycle) max_entry = std::max(max_entry, v);
        pos = close + 1;
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
    }
    int k = degree.value_or(max_entry);
    if (k < max_entry)
        throw parse_error("permutation: entry exceeds the stated degree", 0);

    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i];
            int to = cycle[(i + 1) % cycle.size()];
            if (used[static_cast<std::size_t>(from - 1)])
                throw parse_error("permutation: repeated entry in cycles", 0);
            used[static_cast<std::size_t>(from - 1)] = true;
            images[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    return Permutation{std::move(images)};
}

} // namespace

Permutation parse_permutation(std::string_view text, std::optional<int> degree) {
    std::size_t first = text.find_first_not_of(' ');
    if (first == std::string_view::npos)
        throw parse_error("permutation: empty input", 0);
    if (text[first] == '(') return parse_cycles(text, degree);

    std::vector<int> images;
    std::size_t pos = first;
    while (pos < text.size()) {
        int v = parse_int(text, pos);
        if (v < 1) throw parse_error("permutation: entries are 1-based", pos);
        images.push_back(v);
        skip_spaces(text, pos);
    }
    if (degree && *degree != static_cast<int>(images.size()))
        throw parse_error("permutation: one-line length disagrees with the stated degree", 0);
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] > static_cast<int>(images.size()))
            throw parse_error("permutation: entry out of range", 0);
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (images[i] == images[j])
                throw parse_error("permutation: duplicate entry", 0);
    }
    return Permutation{std::move(images)};
}

std::string format_permutation(const Permutation& a, PermNotation notation) {
    std::ostringstream os;
    if (notation == PermNotation::OneLine) {
        for (int i = 1; i <= a.degree(); ++i) {
            if (i > 1) os << ' ';
            os << a(i);
        }
        return os.str();
    }
    const int k = a.degree();
    const bool compact = k <= 9;
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    bool any = false;
    for (int i = 1; i <= k; ++i) {
        if (seen[static_cast<std::size_t>(i - 1)] || a(i) == i) continue;
        os << '(';
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = a(j)) {
            seen[static_cast<std::size_t>(j - 1)] = true;
            if (!compact && j != i) os << ' ';
            os << j;
        }
        os << ')';
        any = true;
    }
    if (!any) return "()";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& a) {
    return os << format_permutation(a);
}

} // namespace suninv
