#include "hartogs/arrangement.hpp"

#include <algorithm>
#include <optional>

namespace hartogs {

namespace {

struct Node {
    std::vector<int> signs;
    RatMat rows;  // accumulated H-rep: V plus one or two rows per processed hyperplane
    RatMat gens;  // double description of the closure
    RatVec relint;
};

// Builds the node if its open sign region is nonempty. The relint point of the
// closed cone decides realizability: on a polyhedral cone each linear form is
// either identically zero or of constant strict sign on the relative interior,
// so the strict sign conditions hold somewhere iff they hold at this point.
std::optional<Node> make_node(std::size_t rank, const RatMat& hyperplanes,
                              std::vector<int> signs, RatMat rows) {
    Node node;
    node.gens = dual_generators(rank, rows);
    node.relint = zero_vec(rank);
    for (const auto& g : node.gens) node.relint = vec_add(node.relint, g);
    for (std::size_t j = 0; j < signs.size(); ++j) {
        if (sgn(dot(hyperplanes[j], node.relint)) != signs[j]) return std::nullopt;
    }
    node.signs = std::move(signs);
    node.rows = std::move(rows);
    return node;
}

}  // namespace

bool sign_leq(const std::vector<int>& f, const std::vector<int>& g) {
    if (f.size() != g.size()) throw DimensionMismatch("sign_leq: sign vector lengths differ");
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (f[j] != 0 && f[j] != g[j]) return false;
    }
    return true;
}

Arrangement enumerate_faces(const Cone& V, RatMat hyperplanes, bool parallel) {
    const std::size_t n = V.ambient_rank();
    for (auto& h : hyperplanes) h = canonical_normal(h);
    sort_unique(hyperplanes);

    std::vector<Node> level;
    if (auto root = make_node(n, hyperplanes, {}, V.inequalities())) {
        level.push_back(std::move(*root));
    }

    for (std::size_t t = 0; t < hyperplanes.size(); ++t) {
        // each node spawns up to three children: strict +, strict -, contained in h
        std::vector<std::optional<Node>> buckets(3 * level.size());
        const auto expand = [&](std::size_t i) {
            const Node& node = level[i];
            const RatVec& h = hyperplanes[t];
            for (int child = 0; child < 3; ++child) {
                const int sign = child == 0 ? 1 : child == 1 ? -1 : 0;
                RatMat rows = node.rows;
                if (sign >= 0) rows.push_back(h);
                if (sign <= 0) rows.push_back(vec_neg(h));
                std::vector<int> signs = node.signs;
                signs.push_back(sign);
                buckets[3 * i + child] =
                    make_node(n, hyperplanes, std::move(signs), std::move(rows));
            }
        };
        if (parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < static_cast<long>(level.size()); ++i) {
                expand(static_cast<std::size_t>(i));
            }
        } else {
            for (std::size_t i = 0; i < level.size(); ++i) expand(i);
        }
        std::vector<Node> next;
        next.reserve(buckets.size());
        for (auto& b : buckets) {
            if (b) next.push_back(std::move(*b));
        }
        level = std::move(next);
    }

    Arrangement arr;
    arr.hyperplanes = std::move(hyperplanes);
    arr.faces.reserve(level.size());
    for (auto& node : level) {
        ArrangementFace face;
        face.signs = std::move(node.signs);
        face.dim = rank(node.gens);
        face.closure = Cone::from_generators(n, std::move(node.gens));
        face.relint_point = std::move(node.relint);
        arr.faces.push_back(std::move(face));
    }
    std::sort(arr.faces.begin(), arr.faces.end(),
              [](const ArrangementFace& a, const ArrangementFace& b) {
                  return a.signs < b.signs;
              });
    return arr;
}

}  // namespace hartogs
