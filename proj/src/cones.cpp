#include "hartogs/cones.hpp"

#include <algorithm>
#include <deque>

namespace hartogs {

namespace {

struct Ray {
    RatVec r;                 // coordinates w.r.t. the row-space basis
    std::vector<char> tight;  // indexed by constraint row; set for processed rows only
};

// Columns of the inverse of the k x k matrix with the given rows. The rows are
// guaranteed independent by the caller.
RatMat inverse_columns(const RatMat& m) {
    const std::size_t k = m.size();
    RatMat aug(k, RatVec(2 * k, Rat(0)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = m[i][j];
        aug[i][k + i] = 1;
    }
    const RatMat r = rref(std::move(aug));
    RatMat cols(k, RatVec(k));
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = 0; i < k; ++i) cols[c][i] = r[i][k + c];
    }
    return cols;
}

}  // namespace

RatMat dual_generators(std::size_t rank_n, RatMat rows) {
    RatMat canon;
    canon.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != rank_n) {
            throw DimensionMismatch("dual_generators: row length " + std::to_string(r.size()) +
                                    " in ambient rank " + std::to_string(rank_n));
        }
        if (!is_zero(r)) canon.push_back(primitive(r));
    }
    sort_unique(canon);

    const RatMat lineal = nullspace(canon, rank_n);  // canon empty: standard basis
    const std::size_t k = rank_n - lineal.size();

    RatMat out;
    if (k > 0) {
        const RatMat B = rref(canon);  // canonical basis of the constraint row space
        RatMat P;                      // constraints in row-space coordinates
        P.reserve(canon.size());
        for (const auto& a : canon) {
            RatVec p(k);
            for (std::size_t i = 0; i < k; ++i) p[i] = dot(a, B[i]);
            P.push_back(std::move(p));
        }

        // simplicial start: first k independent projected rows, rays = inverse columns
        std::vector<std::size_t> init;
        std::vector<char> in_init(P.size(), 0);
        {
            RatMat acc;
            for (std::size_t j = 0; j < P.size() && init.size() < k; ++j) {
                acc.push_back(P[j]);
                if (rank(acc) == acc.size()) {
                    init.push_back(j);
                    in_init[j] = 1;
                } else {
                    acc.pop_back();
                }
            }
        }
        RatMat m0(k);
        for (std::size_t i = 0; i < k; ++i) m0[i] = P[init[i]];
        std::vector<Ray> rays;
        {
            const RatMat cols = inverse_columns(m0);
            for (std::size_t i = 0; i < k; ++i) {
                Ray ray;
                ray.r = primitive(cols[i]);
                ray.tight.assign(P.size(), 0);
                for (std::size_t j = 0; j < k; ++j) {
                    if (j != i) ray.tight[init[j]] = 1;  // <P[init[j]], r_i> = delta_ji
                }
                rays.push_back(std::move(ray));
            }
        }

        // incremental insertion; adjacency via rank(common tight rows) == k - 2
        for (std::size_t t = 0; t < P.size(); ++t) {
            if (in_init[t]) continue;
            std::vector<int> sign_of(rays.size());
            for (std::size_t i = 0; i < rays.size(); ++i) sign_of[i] = sgn(dot(P[t], rays[i].r));

            std::vector<Ray> next;
            for (std::size_t i = 0; i < rays.size(); ++i) {
                if (sign_of[i] < 0) continue;
                Ray kept = rays[i];
                if (sign_of[i] == 0) kept.tight[t] = 1;
                next.push_back(std::move(kept));
            }
            for (std::size_t p = 0; p < rays.size(); ++p) {
                if (sign_of[p] <= 0) continue;
                for (std::size_t q = 0; q < rays.size(); ++q) {
                    if (sign_of[q] >= 0) continue;
                    RatMat common;
                    for (std::size_t j = 0; j < P.size(); ++j) {
                        if (rays[p].tight[j] && rays[q].tight[j]) common.push_back(P[j]);
                    }
                    if (rank(common) != k - 2) continue;
                    const Rat alpha = dot(P[t], rays[p].r);
                    const Rat beta = dot(P[t], rays[q].r);
                    Ray born;
                    born.r = primitive(vec_sub(vec_scale(alpha, rays[q].r),
                                               vec_scale(beta, rays[p].r)));
                    born.tight.assign(P.size(), 0);
                    for (std::size_t j = 0; j < P.size(); ++j) {
                        born.tight[j] = rays[p].tight[j] && rays[q].tight[j];
                    }
                    born.tight[t] = 1;
                    next.push_back(std::move(born));
                }
            }
            rays = std::move(next);
        }

        for (const auto& ray : rays) {
            RatVec x = zero_vec(rank_n);
            for (std::size_t i = 0; i < k; ++i) x = vec_add(x, vec_scale(ray.r[i], B[i]));
            out.push_back(primitive(x));
        }
    }
    for (const auto& l : lineal) {
        out.push_back(l);  // nullspace rows are primitive
        out.push_back(vec_neg(l));
    }
    sort_unique(out);
    return out;
}

Cone::Cone(std::size_t rank, RatMat gens, RatMat ineqs)
    : rank_(rank), gens_(std::move(gens)), ineqs_(std::move(ineqs)) {}

Cone Cone::from_generators(std::size_t rank, RatMat gens) {
    RatMat canon;
    canon.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.size() != rank) {
            throw DimensionMismatch("from_generators: generator length " +
                                    std::to_string(g.size()) + " in ambient rank " +
                                    std::to_string(rank));
        }
        if (!hartogs::is_zero(g)) canon.push_back(primitive(g));
    }
    sort_unique(canon);
    RatMat ineqs = dual_generators(rank, canon);
    return Cone(rank, std::move(canon), std::move(ineqs));
}

Cone Cone::from_inequalities(std::size_t rank, RatMat ineqs) {
    RatMat gens = dual_generators(rank, std::move(ineqs));
    RatMat minimal = dual_generators(rank, gens);
    return Cone(rank, std::move(gens), std::move(minimal));
}

Cone Cone::dual() const {
    // generators of the dual are this cone's minimal inequalities; the dual's
    // minimal H-rep is in turn the canonical generator set of this cone
    RatMat gens = ineqs_;
    RatMat ineqs = dual_generators(rank_, ineqs_);
    return Cone(rank_, std::move(gens), std::move(ineqs));
}

bool Cone::contains(const RatVec& v) const {
    if (v.size() != rank_) {
        throw DimensionMismatch("contains: vector length " + std::to_string(v.size()) +
                                " in ambient rank " + std::to_string(rank_));
    }
    for (const auto& h : ineqs_) {
        if (dot(h, v) < 0) return false;
    }
    return true;
}

bool Cone::contains_relint(const RatVec& v) const {
    if (!contains(v)) return false;
    for (const auto& h : ineqs_) {
        if (!is_equality_constraint(*this, h) && dot(h, v) == 0) return false;
    }
    return true;
}

std::size_t Cone::dim() const { return rank(gens_); }

std::size_t Cone::lineality_dim() const { return rank_ - rank(ineqs_); }

RatVec Cone::relative_interior_point() const {
    if (gens_.empty()) throw ZeroCone();
    RatVec p = zero_vec(rank_);
    for (const auto& g : gens_) p = vec_add(p, g);
    return p;
}

bool Cone::operator==(const Cone& other) const {
    return rank_ == other.rank_ && ineqs_ == other.ineqs_;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_rank() != b.ambient_rank()) {
        throw DimensionMismatch("intersect: ambient ranks " +
                                std::to_string(a.ambient_rank()) + " and " +
                                std::to_string(b.ambient_rank()));
    }
    RatMat rows = a.inequalities();
    rows.insert(rows.end(), b.inequalities().begin(), b.inequalities().end());
    return Cone::from_inequalities(a.ambient_rank(), std::move(rows));
}

bool is_equality_constraint(const Cone& c, const RatVec& h) {
    return std::binary_search(c.inequalities().begin(), c.inequalities().end(), vec_neg(h),
                              lex_less);
}

bool is_face(const Cone& f, const Cone& c) {
    if (f.ambient_rank() != c.ambient_rank()) {
        throw DimensionMismatch("is_face: ambient ranks differ");
    }
    for (const auto& g : f.generators()) {
        if (!c.contains(g)) return false;
    }
    // tightest valid inequality vanishing on f: intersect with every h tight on all of f
    RatMat rows = c.inequalities();
    for (const auto& h : c.inequalities()) {
        bool tight = true;
        for (const auto& g : f.generators()) {
            if (dot(h, g) != 0) { tight = false; break; }
        }
        if (tight) rows.push_back(vec_neg(h));
    }
    return Cone::from_inequalities(c.ambient_rank(), std::move(rows)) == f;
}

bool cone_less(const Cone& a, const Cone& b) {
    const std::size_t da = a.dim(), db = b.dim();
    if (da != db) return da < db;
    if (a.generators() != b.generators()) {
        return std::lexicographical_compare(a.generators().begin(), a.generators().end(),
                                            b.generators().begin(), b.generators().end(),
                                            lex_less);
    }
    return std::lexicographical_compare(a.inequalities().begin(), a.inequalities().end(),
                                        b.inequalities().begin(), b.inequalities().end(),
                                        lex_less);
}

std::vector<Cone> proper_facets(const Cone& c) {
    std::vector<Cone> facets;
    for (const auto& h : c.inequalities()) {
        if (is_equality_constraint(c, h)) continue;
        RatMat rows = c.inequalities();
        rows.push_back(vec_neg(h));
        Cone f = Cone::from_inequalities(c.ambient_rank(), std::move(rows));
        if (std::find(facets.begin(), facets.end(), f) == facets.end()) {
            facets.push_back(std::move(f));
        }
    }
    std::sort(facets.begin(), facets.end(), cone_less);
    return facets;
}

std::vector<Cone> all_faces(const Cone& c) {
    std::vector<Cone> faces{c};
    std::deque<Cone> queue{c};
    while (!queue.empty()) {
        const Cone cur = queue.front();
        queue.pop_front();
        for (auto& f : proper_facets(cur)) {
            if (std::find(faces.begin(), faces.end(), f) == faces.end()) {
                faces.push_back(f);
                queue.push_back(std::move(f));
            }
        }
    }
    std::sort(faces.begin(), faces.end(), cone_less);
    return faces;
}

std::string cone_to_string(const Cone& c) {
    std::string s = "cone{";
    const auto& gens = c.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ", ";
        s += vec_to_string(gens[i]);
    }
    return s + "}";
}

}  // namespace hartogs
