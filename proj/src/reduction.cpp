#include "maslov/reduction.hpp"

#include "maslov/maslov.hpp"

#include <algorithm>

namespace maslov {

void CrossingWord::validate() const {
    size_t n = crossings.size();
    if (n < 2) throw SemanticError("word needs at least the two endpoints");
    for (size_t i = 0; i + 1 < n; ++i)
        if (!(crossings[i].position < crossings[i + 1].position))
            throw SemanticError("word positions must be strictly increasing");
    if (traversal.size() != n) throw SemanticError("traversal must visit every crossing");
    std::vector<char> seen(n, 0);
    for (int i : traversal) {
        if (i < 0 || size_t(i) >= n || seen[i])
            throw SemanticError("traversal is not a permutation");
        seen[i] = 1;
    }
    if (traversal.front() != x_index || traversal.back() != y_index)
        throw SemanticError("traversal must run from x to y");
    if (x_index == y_index) throw SemanticError("x and y must be distinct crossings");
    for (size_t i = 0; i + 1 < traversal.size(); ++i)
        if (crossings[traversal[i]].dir == crossings[traversal[i + 1]].dir)
            throw SemanticError("direction classes must alternate along B");
    for (const auto& c : crossings)
        if (c.sign != (c.dir == Vertical::Up ? 1 : -1))
            throw SemanticError("crossing sign must match its direction class");
}

int CrossingWord::next_along(int i) const {
    for (size_t k = 0; k + 1 < traversal.size(); ++k)
        if (traversal[k] == i) return traversal[k + 1];
    return -1;
}

CrossingWord crossing_profile(const Trace& t) {
    require_normalized(t);
    ArcCondition ac = arc_condition(t);
    if (!ac.satisfied) throw ArcConditionViolated(ac.reason);

    PLPath bl = beta_lift(t);
    Rational lo = min_r(ac.arc_b.from, ac.arc_b.to);
    Rational hi = max_r(ac.arc_b.from, ac.arc_b.to);
    bool cyclic = t.beta.is_closed_or_periodic();
    Rational L = cyclic ? curve_length(t.beta) : Rational(0);

    struct Hit {
        Rational along;  // distance from x along B
        int index;       // crossing index in the word
    };
    std::vector<WordCrossing> crossings;
    std::vector<Hit> hits;
    for (const auto& ip : t.crossings) {
        // Occurrences of this crossing inside the arc's parameter span.
        std::vector<Rational> params;
        if (cyclic) {
            Rational q = ip.beta_position;
            while (q >= lo) q -= L;
            while (q < lo) q += L;
            for (; q <= hi; q += L) params.push_back(q);
        } else if (lo <= ip.beta_position && ip.beta_position <= hi) {
            params.push_back(ip.beta_position);
        }
        for (const auto& q : params) {
            Point tan = tangent_at(bl, ip.location);
            int legdir = ac.arc_b.to > ac.arc_b.from ? 1 : -1;
            int updown = sgn(tan.y) * legdir;
            if (updown == 0) throw NonTransverse("boundary arc tangent to the axis");
            WordCrossing wc;
            wc.position = ip.location.x;
            wc.dir = updown > 0 ? Vertical::Up : Vertical::Down;
            wc.sign = updown;
            hits.push_back({abs_r(q - ac.arc_b.from), int(crossings.size())});
            crossings.push_back(wc);
        }
    }

    std::vector<int> order(crossings.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return crossings[a].position < crossings[b].position;
    });
    std::vector<int> rank(crossings.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = int(i);

    CrossingWord w;
    for (int i : order) w.crossings.push_back(crossings[i]);
    std::sort(hits.begin(), hits.end(),
              [](const Hit& a, const Hit& b) { return a.along < b.along; });
    for (const auto& h : hits) w.traversal.push_back(rank[h.index]);
    for (size_t i = 0; i < w.crossings.size(); ++i) {
        if (w.crossings[i].position == t.x.location.x) w.x_index = int(i);
        if (w.crossings[i].position == t.y.location.x) w.y_index = int(i);
    }
    w.validate();
    return w;
}

namespace {

// 0, 1, 2 for the open intervals left of x, between, right of y; -1 for the
// endpoints themselves.
int interval_of(const CrossingWord& w, int i) {
    const Rational& p = w.crossings[i].position;
    if (p == w.x_pos() || p == w.y_pos()) return -1;
    if (p < w.x_pos()) return 0;
    if (p < w.y_pos()) return 1;
    return 2;
}

CrossingWord erase_pair(const CrossingWord& w, int a, int b) {
    CrossingWord out;
    std::vector<int> remap(w.crossings.size(), -1);
    for (size_t i = 0; i < w.crossings.size(); ++i) {
        if (int(i) == a || int(i) == b) continue;
        remap[i] = int(out.crossings.size());
        out.crossings.push_back(w.crossings[i]);
    }
    for (int i : w.traversal)
        if (remap[i] >= 0) out.traversal.push_back(remap[i]);
    out.x_index = remap[w.x_index];
    out.y_index = remap[w.y_index];
    return out;
}

}  // namespace

bool is_reduced(const CrossingWord& word) {
    for (size_t k = 0; k + 1 < word.traversal.size(); ++k) {
        int a = word.traversal[k], b = word.traversal[k + 1];
        int ia = interval_of(word, a);
        if (ia >= 0 && ia == interval_of(word, b)) return false;
    }
    return true;
}

CrossingWord reduce(CrossingWord word) {
    word.validate();
    for (;;) {
        bool removed = false;
        for (size_t k = 0; k + 1 < word.traversal.size(); ++k) {
            int a = word.traversal[k], b = word.traversal[k + 1];
            int ia = interval_of(word, a);
            if (ia >= 0 && ia == interval_of(word, b)) {
                word = erase_pair(word, a, b);
                removed = true;
                break;
            }
        }
        if (!removed) return word;
    }
}

std::vector<WordCase> classify(const CrossingWord& word) {
    word.validate();
    if (!is_reduced(word)) throw NotReduced("classification needs a reduced word");
    bool c1 = true, c2 = true, c3 = true, c4 = true;
    for (size_t k = 0; k < word.traversal.size(); ++k) {
        int i = word.traversal[k];
        const WordCrossing& c = word.crossings[i];
        bool inside = word.x_pos() <= c.position && c.position <= word.y_pos();
        if (c.dir == Vertical::Up) {
            if (!inside) c4 = false;
            if (i != word.y_index) {
                int f = word.next_along(i);
                if (!(word.crossings[f].position > c.position)) c1 = false;
            }
        } else {
            if (!inside) c2 = false;
            if (i != word.y_index) {
                int f = word.next_along(i);
                if (!(word.crossings[f].position > c.position)) c3 = false;
            }
        }
    }
    std::vector<WordCase> out;
    if (c1) out.push_back(WordCase::Case1);
    if (c2) out.push_back(WordCase::Case2);
    if (c3) out.push_back(WordCase::Case3);
    if (c4) out.push_back(WordCase::Case4);
    return out;
}

namespace {

struct Chord {
    Rational a, b;   // endpoint positions, a < b
    bool upper;
    int order;       // index along B
};

std::vector<Chord> word_chords(const CrossingWord& w) {
    std::vector<Chord> chords;
    for (size_t k = 0; k + 1 < w.traversal.size(); ++k) {
        const WordCrossing& from = w.crossings[w.traversal[k]];
        const WordCrossing& to = w.crossings[w.traversal[k + 1]];
        Chord c;
        c.a = min_r(from.position, to.position);
        c.b = max_r(from.position, to.position);
        c.upper = from.dir == Vertical::Up;
        c.order = int(k);
        chords.push_back(c);
    }
    return chords;
}

bool interleaved(const Chord& c, const Chord& d) {
    if (c.b <= d.a || d.b <= c.a) return false;               // disjoint
    if (d.a < c.a && c.b < d.b) return false;                 // c inside d
    if (c.a < d.a && d.b < c.b) return false;                 // d inside c
    return true;
}

}  // namespace

bool is_realizable(const CrossingWord& word) {
    auto chords = word_chords(word);
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j)
            if (chords[i].upper == chords[j].upper && interleaved(chords[i], chords[j]))
                return false;
    return true;
}

Trace realize_word(const CrossingWord& word) {
    word.validate();
    if (!is_realizable(word))
        throw SemanticError("word chords interleave; no embedded arc realizes it");
    auto chords = word_chords(word);

    // Height by nesting depth: outer chords run higher, with a small
    // order-dependent jitter to keep all horizontal runs distinct.
    long long n = (long long)chords.size();
    std::vector<Rational> height(chords.size());
    for (size_t i = 0; i < chords.size(); ++i) {
        long long depth = 0, maxdepth = 0;
        for (size_t j = 0; j < chords.size(); ++j) {
            if (i == j || chords[i].upper != chords[j].upper) continue;
            if (chords[j].a < chords[i].a && chords[i].b < chords[j].b) ++depth;
        }
        for (size_t j = 0; j < chords.size(); ++j) {
            if (chords[j].upper != chords[i].upper) continue;
            long long d = 0;
            for (size_t k = 0; k < chords.size(); ++k)
                if (k != j && chords[k].upper == chords[j].upper &&
                    chords[k].a < chords[j].a && chords[j].b < chords[k].b)
                    ++d;
            maxdepth = std::max(maxdepth, d);
        }
        height[i] = Rational(maxdepth + 1 - depth) + Rational(chords[i].order, 2 * n);
    }

    std::vector<Point> verts;
    Rational delta(1, 2);
    const WordCrossing& cx = word.crossings[word.x_index];
    verts.push_back({cx.position, chords.front().upper ? -delta : delta});
    for (size_t k = 0; k < chords.size(); ++k) {
        const WordCrossing& from = word.crossings[word.traversal[k]];
        const WordCrossing& to = word.crossings[word.traversal[k + 1]];
        Rational h = chords[k].upper ? height[k] : -height[k];
        verts.push_back({from.position, h});
        verts.push_back({to.position, h});
    }
    verts.push_back({word.crossings[word.y_index].position,
                     chords.back().upper ? -delta : delta});

    PLPath alpha = make_line(point(0, 0), point(1, 0));
    PLPath beta = make_arc(verts);
    auto pts = intersect_curves(alpha, beta);
    const IntersectionPoint* px = nullptr;
    const IntersectionPoint* py = nullptr;
    for (const auto& p : pts) {
        if (p.location == Point{word.x_pos(), Rational(0)}) px = &p;
        if (p.location == Point{word.y_pos(), Rational(0)}) py = &p;
    }
    if (!px || !py) throw SemanticError("realized arc misses a word endpoint");
    BoundaryPathSpec ga{*px, *py, Direction::Forward, 0};
    BoundaryPathSpec gb{*px, *py, Direction::Forward, 0};
    return make_trace(Surface::plane(), alpha, beta, *px, *py, ga, gb);
}

}  // namespace maslov
