#include "doublet/dw.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doublet/parallel.hpp"

namespace doublet {

const std::vector<GroupPresentation>& manifold_catalog() {
    static const std::vector<GroupPresentation> catalog = [] {
        std::vector<GroupPresentation> c;
        c.push_back({"S^3", 1, {{1}}});
        c.push_back({"S1xS2", 1, {}});
        c.push_back({"T^3", 3, {{1, 2, -1, -2}, {1, 3, -1, -3}, {2, 3, -2, -3}}});
        for (int p = 2; p <= 6; ++p) {
            std::vector<int> rel(p, 1);
            c.push_back({"L(" + std::to_string(p) + ")", 1, {rel}});
        }
        // <a,b | (ab)^2 a^-3, a^3 b^-5>
        c.push_back({"Poincare", 2, {{1, 2, 1, 2, -1, -1, -1}, {1, 1, 1, -2, -2, -2, -2, -2}}});
        c.push_back({"Z^2", 2, {{1, 2, -1, -2}}});
        return c;
    }();
    return catalog;
}

GroupPresentation find_manifold(const std::string& name) {
    for (const auto& m : manifold_catalog())
        if (m.name == name) return m;
    throw std::invalid_argument("unknown manifold: " + name);
}

GroupPresentation parse_presentation(const std::string& text) {
    auto fail = [&]() { throw std::invalid_argument("malformed presentation: " + text); };
    size_t open = text.find('<'), close = text.rfind('>');
    if (open == std::string::npos || close == std::string::npos || close <= open) fail();
    std::string body = text.substr(open + 1, close - open - 1);
    size_t semi = body.find(';');
    if (semi == std::string::npos) fail();
    GroupPresentation p;
    p.name = text;
    p.generators = std::atoi(body.substr(0, semi).c_str());
    if (p.generators < 1 || p.generators > 4)
        throw std::invalid_argument("presentation must have 1..4 generators");
    std::string rels = body.substr(semi + 1);
    std::string word;
    std::vector<std::string> words;
    for (char ch : rels) {
        if (ch == ',') {
            words.push_back(word);
            word.clear();
        } else {
            word += ch;
        }
    }
    words.push_back(word);
    for (const auto& w : words) {
        std::istringstream in(w);
        std::string tok;
        std::vector<int> rel;
        while (in >> tok) {
            if (tok[0] != 'x') fail();
            size_t caret = tok.find('^');
            int idx = std::atoi(tok.substr(1, caret == std::string::npos ? tok.npos : caret - 1).c_str());
            if (idx < 1 || idx > p.generators) fail();
            int exp = 1;
            if (caret != std::string::npos) exp = std::atoi(tok.substr(caret + 1).c_str());
            if (exp == 0) continue;
            int sign = exp > 0 ? 1 : -1;
            for (int i = 0; i < std::abs(exp); ++i) rel.push_back(sign * idx);
        }
        if (!rel.empty()) p.relators.push_back(std::move(rel));
    }
    return p;
}

namespace {

void check_budget(const GroupPresentation& p, const GroupPtr& g, long long budget) {
    double total = 1;
    for (int i = 0; i < p.generators; ++i) total *= g->order();
    if (total > (double)budget)
        throw std::runtime_error("homomorphism search budget exceeded (" +
                                 std::to_string((long long)total) + " assignments)");
}

bool relator_holds(const std::vector<int>& rel, const std::vector<int>& image, const GroupPtr& g) {
    int acc = 0;
    for (int t : rel) {
        int x = image[std::abs(t) - 1];
        acc = g->op(acc, t > 0 ? x : g->inv(x));
    }
    return acc == 0;
}

long long count_from(const GroupPresentation& p, const GroupPtr& g, std::vector<int>& image,
                     int next) {
    if (next == p.generators) return 1;
    long long total = 0;
    for (int x = 0; x < g->order(); ++x) {
        image[next] = x;
        bool ok = true;
        // prune on relators fully supported by the assigned prefix
        for (const auto& rel : p.relators) {
            bool supported = true;
            for (int t : rel)
                if (std::abs(t) - 1 > next) { supported = false; break; }
            if (supported && !relator_holds(rel, image, g)) { ok = false; break; }
        }
        if (ok) total += count_from(p, g, image, next + 1);
    }
    image[next] = -1;
    return total;
}

}  // namespace

long long count_homomorphisms(const GroupPresentation& p, const GroupPtr& g, long long budget) {
    check_budget(p, g, budget);
    std::atomic<long long> total{0};
    parallel_for(g->order(), [&](int first) {
        std::vector<int> image(p.generators, -1);
        image[0] = first;
        bool ok = true;
        for (const auto& rel : p.relators) {
            bool supported = true;
            for (int t : rel)
                if (std::abs(t) != 1) { supported = false; break; }
            if (supported && !relator_holds(rel, image, g)) { ok = false; break; }
        }
        if (ok) total += count_from(p, g, image, 1);
    });
    return total.load();
}

long long count_homomorphisms_reference(const GroupPresentation& p, const GroupPtr& g,
                                        long long budget) {
    check_budget(p, g, budget);
    int n = g->order();
    long long assignments = 1;
    for (int i = 0; i < p.generators; ++i) assignments *= n;
    long long total = 0;
    std::vector<int> image(p.generators);
    for (long long code = 0; code < assignments; ++code) {
        long long c = code;
        for (int i = 0; i < p.generators; ++i) {
            image[i] = (int)(c % n);
            c /= n;
        }
        bool ok = true;
        for (const auto& rel : p.relators)
            if (!relator_holds(rel, image, g)) { ok = false; break; }
        if (ok) ++total;
    }
    return total;
}

Rational dw_invariant(const GroupPresentation& p, const GroupPtr& g) {
    return Rational(count_homomorphisms(p, g), g->order());
}

DWReport cross_validate(const GroupPtr& g, const GroupPtr& q,
                        const std::vector<GroupPresentation>& catalog) {
    DWReport report;
    for (const auto& m : catalog) {
        DWComparison cmp{m.name, dw_invariant(m, g), dw_invariant(m, q), false};
        cmp.equal = cmp.left == cmp.right;
        if (!cmp.equal) report.all_equal = false;
        report.rows.push_back(cmp);
    }
    return report;
}

}  // namespace doublet
