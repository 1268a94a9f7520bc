#include "vknot/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace vknot {

namespace {

// Renumbers arrow ids by first appearance, scanning circles in order.
void normalize_labels(std::vector<std::vector<Endpoint>>& circles, std::vector<Sign>& signs) {
    const int n = static_cast<int>(signs.size());
    std::vector<int> remap(n, -1);
    std::vector<Sign> new_signs(signs.size(), Sign::Plus);
    int next = 0;
    for (auto& circle : circles) {
        for (auto& ep : circle) {
            if (remap[ep.arrow] < 0) {
                remap[ep.arrow] = next;
                new_signs[next] = signs[ep.arrow];
                ++next;
            }
            ep.arrow = remap[ep.arrow];
        }
    }
    signs = std::move(new_signs);
}

}  // namespace

GaussDiagram GaussDiagram::from_parts(std::vector<std::vector<Endpoint>> circles,
                                      std::vector<Sign> signs) {
    const int n = static_cast<int>(signs.size());
    // bit 0: Over endpoint seen, bit 1: Under endpoint seen
    std::vector<std::uint8_t> seen(n, 0);
    std::size_t slots = 0;
    for (const auto& circle : circles) {
        slots += circle.size();
        for (const auto& ep : circle) {
            if (ep.arrow < 0 || ep.arrow >= n)
                throw std::invalid_argument("endpoint references unknown arrow");
            const std::uint8_t bit = ep.passage == Passage::Over ? 1 : 2;
            if (seen[ep.arrow] & bit)
                throw std::invalid_argument("arrow must occupy one Over and one Under slot");
            seen[ep.arrow] |= bit;
        }
    }
    if (slots != 2 * signs.size())
        throw std::invalid_argument("slot count does not match arrow count");
    for (int a = 0; a < n; ++a)
        if (seen[a] != 3)
            throw std::invalid_argument("arrow must occupy one Over and one Under slot");
    normalize_labels(circles, signs);
    GaussDiagram d;
    d.circles_ = std::move(circles);
    d.signs_ = std::move(signs);
    return d;
}

std::size_t GaussDiagram::slot_count() const {
    std::size_t total = 0;
    for (const auto& c : circles_) total += c.size();
    return total;
}

ArrowEnds arrow_ends(const GaussDiagram& d) {
    ArrowEnds ends;
    ends.tail.resize(d.arrow_count());
    ends.head.resize(d.arrow_count());
    for (int c = 0; c < d.circle_count(); ++c) {
        const auto& circle = d.circles()[c];
        for (int s = 0; s < static_cast<int>(circle.size()); ++s) {
            const Endpoint& ep = circle[s];
            Position pos{c, s};
            if (ep.passage == Passage::Over)
                ends.tail[ep.arrow] = pos;
            else
                ends.head[ep.arrow] = pos;
        }
    }
    return ends;
}

namespace {

struct Token {
    Passage passage;
    long label;
    Sign sign;
    std::size_t offset;
};

struct RawComponent {
    bool empty_circle = false;
    std::vector<Token> tokens;
};

std::vector<RawComponent> tokenize(std::string_view text) {
    std::vector<RawComponent> components;
    components.emplace_back();
    bool saw_content = false;

    std::size_t i = 0;
    const std::size_t n = text.size();
    auto current = [&]() -> RawComponent& { return components.back(); };

    while (i < n) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
            ++i;
            continue;
        }
        if (ch == ';') {
            if (!saw_content || (current().tokens.empty() && !current().empty_circle))
                throw SyntaxError("empty component before ';'", i);
            components.emplace_back();
            saw_content = false;
            ++i;
            continue;
        }
        if (ch == '@') {
            if (!current().tokens.empty() || current().empty_circle)
                throw SyntaxError("'@' must stand alone in its component", i);
            current().empty_circle = true;
            saw_content = true;
            ++i;
            continue;
        }
        if (ch == 'O' || ch == 'U') {
            if (current().empty_circle)
                throw SyntaxError("token after '@' in the same component", i);
            const std::size_t start = i;
            ++i;
            if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '0')
                throw SyntaxError("expected a positive integer label", i);
            long label = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                label = label * 10 + (text[i] - '0');
                if (label > 1'000'000'000L)
                    throw SyntaxError("label too large", i);
                ++i;
            }
            if (i >= n || (text[i] != '+' && text[i] != '-'))
                throw SyntaxError("expected '+' or '-' after label", i);
            Sign sign = text[i] == '+' ? Sign::Plus : Sign::Minus;
            ++i;
            current().tokens.push_back(Token{ch == 'O' ? Passage::Over : Passage::Under,
                                             label, sign, start});
            saw_content = true;
            continue;
        }
        throw SyntaxError(std::string("unexpected character '") + ch + "'", i);
    }
    if (!saw_content || (current().tokens.empty() && !current().empty_circle))
        throw SyntaxError("empty component", n);
    return components;
}

}  // namespace

GaussDiagram parse(std::string_view text) {
    const std::vector<RawComponent> raw = tokenize(text);

    struct LabelInfo {
        int arrow = -1;
        int over = 0;
        int under = 0;
        Sign sign = Sign::Plus;
        int count = 0;
    };
    std::map<long, LabelInfo> labels;

    std::vector<std::vector<Endpoint>> circles;
    std::vector<Sign> signs;
    for (const auto& comp : raw) {
        circles.emplace_back();
        auto& circle = circles.back();
        for (const Token& tok : comp.tokens) {
            LabelInfo& info = labels[tok.label];
            if (info.arrow < 0) {
                info.arrow = static_cast<int>(signs.size());
                info.sign = tok.sign;
                signs.push_back(tok.sign);
            }
            info.count++;
            (tok.passage == Passage::Over ? info.over : info.under)++;
            if (tok.sign != info.sign)
                throw ValidationError("label " + std::to_string(tok.label) +
                                          ": sign mismatch between its two tokens",
                                      ValidationError::Reason::SignMismatch, tok.label);
            circle.push_back(Endpoint{info.arrow, tok.passage});
        }
    }
    for (const auto& [label, info] : labels) {
        if (info.count != 2)
            throw ValidationError("label " + std::to_string(label) + " appears " +
                                      std::to_string(info.count) + " times, expected 2",
                                  ValidationError::Reason::LabelCount, label);
        if (info.over != 1 || info.under != 1)
            throw ValidationError("label " + std::to_string(label) +
                                      " appears twice with the same passage",
                                  ValidationError::Reason::SamePassage, label);
    }
    return GaussDiagram::from_parts(std::move(circles), std::move(signs));
}

std::string serialize(const GaussDiagram& d) {
    std::string out;
    bool first_circle = true;
    for (const auto& circle : d.circles()) {
        if (!first_circle) out.push_back(';');
        first_circle = false;
        if (circle.empty()) {
            out.push_back('@');
            continue;
        }
        for (const Endpoint& ep : circle) {
            out.push_back(passage_char(ep.passage));
            out += std::to_string(ep.arrow + 1);
            out.push_back(sign_char(d.sign_of(ep.arrow)));
        }
    }
    return out;
}

int component_count(const GaussDiagram& d) { return d.circle_count(); }

namespace {

// Token key for canonical comparison: (passage, first-appearance label,
// sign) with Over < Under and '+' < '-'. A candidate's key sequence lists
// circles in candidate order, each circle prefixed by a separator.
struct CandidateKey {
    std::vector<std::int64_t> flat;

    static std::int64_t encode(Passage p, int label, Sign s) {
        return (static_cast<std::int64_t>(label) << 2) |
               (static_cast<std::int64_t>(p == Passage::Under) << 1) |
               static_cast<std::int64_t>(s == Sign::Minus);
    }
};

}  // namespace

std::string canonical_form(const GaussDiagram& d) {
    const int k = d.circle_count();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);

    // Sorting indices once keeps next_permutation exhaustive.
    std::vector<int> best_perm;
    std::vector<int> best_rot;
    std::vector<std::int64_t> best_key;

    std::vector<int> rot(k, 0);
    std::vector<std::int64_t> key;
    std::vector<int> relabel;

    auto build_key = [&](const std::vector<int>& p, const std::vector<int>& r) {
        key.clear();
        relabel.assign(d.arrow_count(), -1);
        int next = 0;
        for (int ci = 0; ci < k; ++ci) {
            const auto& circle = d.circles()[p[ci]];
            const int len = static_cast<int>(circle.size());
            key.push_back(-1);  // circle separator; sorts before any token
            for (int s = 0; s < len; ++s) {
                const Endpoint& ep = circle[(s + r[ci]) % len];
                if (relabel[ep.arrow] < 0) relabel[ep.arrow] = next++;
                // Passage dominates label per the token order (O < U).
                key.push_back((static_cast<std::int64_t>(ep.passage == Passage::Under) << 40) |
                              (static_cast<std::int64_t>(relabel[ep.arrow]) << 1) |
                              static_cast<std::int64_t>(d.sign_of(ep.arrow) == Sign::Minus));
            }
        }
    };

    do {
        // Iterate rotation vectors for this circle order.
        std::fill(rot.begin(), rot.end(), 0);
        while (true) {
            build_key(perm, rot);
            if (best_key.empty() || key < best_key) {
                best_key = key;
                best_perm = perm;
                best_rot = rot;
            }
            int i = k - 1;
            for (; i >= 0; --i) {
                const int len = d.circle_length(perm[i]);
                if (len == 0) continue;
                if (++rot[i] < len) break;
                rot[i] = 0;
            }
            if (i < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    GaussDiagram out = d;
    if (k > 0) {
        out = permute_circles(d, best_perm);
        for (int ci = 0; ci < k; ++ci)
            if (best_rot[ci] != 0) out = rotate_basepoint(out, ci, best_rot[ci]);
    }
    return serialize(out);
}

GaussDiagram mirror(const GaussDiagram& d) {
    std::vector<std::vector<Endpoint>> circles = d.circles();
    std::vector<Sign> signs = d.signs();
    for (auto& circle : circles)
        for (auto& ep : circle) ep.passage = flipped(ep.passage);
    for (auto& s : signs) s = negated(s);
    return GaussDiagram::from_parts(std::move(circles), std::move(signs));
}

GaussDiagram reverse_component(const GaussDiagram& d, int circle) {
    if (circle < 0 || circle >= d.circle_count())
        throw IndexError("component index " + std::to_string(circle) + " out of range");
    std::vector<std::vector<Endpoint>> circles = d.circles();
    std::vector<Sign> signs = d.signs();

    std::vector<int> ends_on_circle(d.arrow_count(), 0);
    for (const Endpoint& ep : circles[circle]) ends_on_circle[ep.arrow]++;
    for (int a = 0; a < d.arrow_count(); ++a)
        if (ends_on_circle[a] == 1) signs[a] = negated(signs[a]);

    std::reverse(circles[circle].begin(), circles[circle].end());
    return GaussDiagram::from_parts(std::move(circles), std::move(signs));
}

GaussDiagram connected_sum(const GaussDiagram& d1, int break1,
                           const GaussDiagram& d2, int break2) {
    if (d1.circle_count() != 1 || d2.circle_count() != 1)
        throw NotAKnotError("connected_sum requires single-circle diagrams");
    const int len1 = d1.circle_length(0);
    const int len2 = d2.circle_length(0);
    if (break1 < 0 || break1 >= std::max(len1, 1))
        throw IndexError("break position " + std::to_string(break1) + " out of range");
    if (break2 < 0 || break2 >= std::max(len2, 1))
        throw IndexError("break position " + std::to_string(break2) + " out of range");

    std::vector<Endpoint> word;
    word.reserve(len1 + len2);
    for (int s = 0; s < len1; ++s) word.push_back(d1.circles()[0][(break1 + s) % len1]);
    const int shift = d1.arrow_count();
    for (int s = 0; s < len2; ++s) {
        Endpoint ep = d2.circles()[0][(break2 + s) % len2];
        ep.arrow += shift;
        word.push_back(ep);
    }
    std::vector<Sign> signs = d1.signs();
    signs.insert(signs.end(), d2.signs().begin(), d2.signs().end());
    return GaussDiagram::from_parts({std::move(word)}, std::move(signs));
}

GaussDiagram rotate_basepoint(const GaussDiagram& d, int circle, int offset) {
    if (circle < 0 || circle >= d.circle_count())
        throw IndexError("component index " + std::to_string(circle) + " out of range");
    std::vector<std::vector<Endpoint>> circles = d.circles();
    auto& target = circles[circle];
    const int len = static_cast<int>(target.size());
    if (len > 0) {
        const int r = ((offset % len) + len) % len;
        std::rotate(target.begin(), target.begin() + r, target.end());
    }
    return GaussDiagram::from_parts(std::move(circles), std::vector<Sign>(d.signs()));
}

GaussDiagram permute_circles(const GaussDiagram& d, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != d.circle_count())
        throw IndexError("permutation size does not match circle count");
    std::vector<std::vector<Endpoint>> circles;
    circles.reserve(perm.size());
    for (int p : perm) {
        if (p < 0 || p >= d.circle_count()) throw IndexError("permutation index out of range");
        circles.push_back(d.circles()[p]);
    }
    return GaussDiagram::from_parts(std::move(circles), std::vector<Sign>(d.signs()));
}

}  // namespace vknot
