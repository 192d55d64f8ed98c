#include "tubex/hull.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tubex {

RatPoint to_rational(const LatticePoint& p) {
    RatPoint out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = Rat(p[i]);
    return out;
}

std::vector<RatPoint> to_rational(const std::vector<LatticePoint>& pts) {
    std::vector<RatPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(to_rational(p));
    return out;
}

int matrix_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat factor = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b) {
    size_t n = a.size();
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat factor = a[i][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[i][j] -= factor * a[c][j];
            b[i] -= factor * b[c];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

namespace {

std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
    Int lcm = 1;
    for (const auto& x : v) {
        Int d = boost::multiprecision::denominator(x);
        lcm = boost::multiprecision::lcm(lcm, d);
    }
    std::vector<Int> out(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = boost::multiprecision::numerator(v[i]) * (lcm / boost::multiprecision::denominator(v[i]));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

} // namespace

std::optional<std::vector<Int>> kernel_direction(const std::vector<std::vector<Rat>>& m) {
    if (m.empty()) return std::nullopt;
    size_t cols = m[0].size();
    auto a = m;
    size_t rows = a.size();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat factor = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r != cols - 1) return std::nullopt;
    // the single free column determines the kernel vector
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rat> v(cols, Rat(0));
    v[free_col] = 1;
    for (size_t i = 0; i < r; ++i) v[pivot_col[i]] = -a[i][free_col] / a[i][pivot_col[i]];
    return primitive_integer(v);
}

int affine_dimension(const std::vector<RatPoint>& points) {
    if (points.empty()) throw std::invalid_argument("affine dimension of empty set");
    std::vector<std::vector<Rat>> diffs;
    for (size_t i = 1; i < points.size(); ++i) {
        std::vector<Rat> d(points[i].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return matrix_rank(diffs);
}

namespace {

Rat dot(const std::vector<Int>& a, const RatPoint& x) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += Rat(a[i]) * x[i];
    return s;
}

} // namespace

SupportCheck verify_supporting(const std::vector<RatPoint>& points, const Hyperplane& h,
                               Side side) {
    SupportCheck out;
    for (size_t i = 0; i < points.size(); ++i) {
        Rat v = dot(h.coefficients, points[i]);
        if (v == h.rhs) {
            out.incident.push_back(static_cast<int>(i));
        } else if ((side == Side::Above && v < h.rhs) || (side == Side::Below && v > h.rhs)) {
            out.is_valid = false;
            out.witness = static_cast<int>(i);
            return out;
        }
    }
    out.is_valid = !out.incident.empty();
    return out;
}

FacetResult facets_from_candidates(const std::vector<RatPoint>& points,
                                   const std::vector<std::pair<Hyperplane, Side>>& candidates) {
    if (points.empty()) throw std::invalid_argument("no points");
    int n = static_cast<int>(points[0].size());
    if (affine_dimension(points) != n)
        throw std::invalid_argument("points are not full-dimensional");

    FacetResult out;
    for (size_t ci = 0; ci < candidates.size(); ++ci) {
        const auto& [h, side] = candidates[ci];
        SupportCheck chk = verify_supporting(points, h, side);
        if (!chk.is_valid) {
            out.failures.push_back(
                {static_cast<int>(ci),
                 chk.witness ? "point strictly on the wrong side" : "no incident point",
                 chk.witness});
            continue;
        }
        std::vector<RatPoint> inc;
        for (int i : chk.incident) inc.push_back(points[i]);
        if (affine_dimension(inc) != n - 1) {
            out.failures.push_back(
                {static_cast<int>(ci), "incident set is not of facet dimension", std::nullopt});
            continue;
        }
        out.facets.push_back({h, side, chk.incident});
    }
    return out;
}

namespace {

// rows of the inequality system in "a.x >= b" form
struct GeRow {
    std::vector<Int> a;
    Int b;
};

std::vector<GeRow> ge_form(const std::vector<std::pair<Hyperplane, Side>>& facets) {
    std::vector<GeRow> rows;
    for (const auto& [h, side] : facets) {
        GeRow r{h.coefficients, h.rhs};
        if (side == Side::Below) {
            for (auto& x : r.a) x = -x;
            r.b = -r.b;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

bool recession_ray_exists(const std::vector<GeRow>& rows, int n) {
    // the recession cone {d : A d >= 0} is nontrivial iff A is rank
    // deficient (lineality) or some extreme ray exists; extreme rays of
    // a pointed cone are kernels of (n-1)-subsets of rows
    std::vector<std::vector<Rat>> a;
    for (const auto& r : rows) {
        std::vector<Rat> row(n);
        for (int j = 0; j < n; ++j) row[j] = Rat(r.a[j]);
        a.push_back(std::move(row));
    }
    if (matrix_rank(a) < n) return true;
    if (n == 1) {
        // rays are +-e_1
        for (int s : {1, -1}) {
            bool ok = true;
            for (const auto& r : rows)
                if (r.a[0] * s < 0) { ok = false; break; }
            if (ok) return true;
        }
        return false;
    }
    size_t m = rows.size();
    std::vector<int> idx(n - 1);
    std::function<bool(size_t, int)> rec = [&](size_t start, int k) -> bool {
        if (k == n - 1) {
            std::vector<std::vector<Rat>> sub;
            for (int i : idx) sub.push_back(a[i]);
            auto d = kernel_direction(sub);
            if (!d) return false;
            for (int s : {1, -1}) {
                bool ok = true;
                for (const auto& r : rows) {
                    Int v = 0;
                    for (int j = 0; j < n; ++j) v += r.a[j] * (*d)[j] * s;
                    if (v < 0) { ok = false; break; }
                }
                if (ok) return true;
            }
            return false;
        }
        for (size_t i = start; i + (n - 1 - k) <= m; ++i) {
            idx[k] = static_cast<int>(i);
            if (rec(i + 1, k + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

} // namespace

std::vector<RatPoint> h_polytope_vertices(const std::vector<std::pair<Hyperplane, Side>>& facets,
                                          int n) {
    auto rows = ge_form(facets);
    size_t m = rows.size();
    if (static_cast<int>(m) < n + 1) throw std::runtime_error("too few facets to bound a polytope");
    if (m > 64) throw ScaleError("facet count exceeds the basis-enumeration bound");
    if (recession_ray_exists(rows, n))
        throw std::runtime_error("facet system is unbounded");

    std::set<RatPoint> verts;
    std::vector<int> idx(n);
    std::function<void(size_t, int)> rec = [&](size_t start, int k) {
        if (k == n) {
            std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
            std::vector<Rat> b(n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) a[i][j] = Rat(rows[idx[i]].a[j]);
                b[i] = Rat(rows[idx[i]].b);
            }
            auto x = solve_square(std::move(a), std::move(b));
            if (!x) return;
            for (const auto& r : rows) {
                Rat v = 0;
                for (int j = 0; j < n; ++j) v += Rat(r.a[j]) * (*x)[j];
                if (v < r.b) return;
            }
            verts.insert(*x);
            return;
        }
        for (size_t i = start; i + (n - k) <= m; ++i) {
            idx[k] = static_cast<int>(i);
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    if (verts.empty()) throw std::runtime_error("facet system is infeasible");
    return {verts.begin(), verts.end()};
}

namespace {

struct FacetKey {
    std::vector<Int> a; // oriented so the inequality reads a.x <= b
    Int b;
    bool operator<(const FacetKey& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

FacetKey key_of(const Hyperplane& h, Side side) {
    FacetKey k{h.coefficients, h.rhs};
    if (side == Side::Above) {
        for (auto& x : k.a) x = -x;
        k.b = -k.b;
    }
    return k;
}

} // namespace

std::vector<Facet> brute_force_facets(const std::vector<RatPoint>& points) {
    if (points.empty()) throw std::invalid_argument("no points");
    int n = static_cast<int>(points[0].size());
    size_t m = points.size();
    if (m > 120 || n > 5) throw ScaleError("brute-force facet bound exceeded");
    if (affine_dimension(points) != n)
        throw std::invalid_argument("points are not full-dimensional");

    std::map<FacetKey, Facet> found;
    std::vector<int> idx(n);
    std::function<void(size_t, int)> rec = [&](size_t start, int k) {
        if (k == n) {
            std::vector<std::vector<Rat>> diffs;
            for (int i = 1; i < n; ++i) {
                std::vector<Rat> d(n);
                for (int j = 0; j < n; ++j) d[j] = points[idx[i]][j] - points[idx[0]][j];
                diffs.push_back(std::move(d));
            }
            std::optional<std::vector<Int>> normal;
            if (n == 1) {
                normal = std::vector<Int>{1};
            } else {
                normal = kernel_direction(diffs);
            }
            if (!normal) return;
            Hyperplane h;
            h.coefficients = *normal;
            Rat rhs = dot(h.coefficients, points[idx[0]]);
            h.rhs = boost::multiprecision::numerator(rhs);
            if (boost::multiprecision::denominator(rhs) != 1) {
                // clear the denominator so (a, b) stays integer
                Int d = boost::multiprecision::denominator(rhs);
                for (auto& x : h.coefficients) x *= d;
                h.rhs = boost::multiprecision::numerator(rhs);
            }
            h.kind = HyperplaneKind::ThinEquation; // unused for oracle facets
            bool above_ok = true, below_ok = true;
            std::vector<int> incident;
            for (size_t i = 0; i < m; ++i) {
                Rat v = dot(h.coefficients, points[i]);
                if (v == h.rhs) incident.push_back(static_cast<int>(i));
                else if (v > h.rhs) below_ok = false;
                else above_ok = false;
                if (!above_ok && !below_ok) return;
            }
            Side side = above_ok ? Side::Above : Side::Below;
            found.emplace(key_of(h, side), Facet{h, side, incident});
            return;
        }
        for (size_t i = start; i + (n - k) <= m; ++i) {
            idx[k] = static_cast<int>(i);
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);

    std::vector<Facet> out;
    for (auto& [key, f] : found) out.push_back(std::move(f));
    return out;
}

std::vector<int> extreme_point_indices(const std::vector<RatPoint>& points,
                                       const std::vector<Facet>& facets) {
    int n = points.empty() ? 0 : static_cast<int>(points[0].size());
    std::vector<int> out;
    for (size_t i = 0; i < points.size(); ++i) {
        std::vector<std::vector<Rat>> normals;
        for (const auto& f : facets)
            if (std::binary_search(f.incident.begin(), f.incident.end(), static_cast<int>(i))) {
                std::vector<Rat> row(n);
                for (int j = 0; j < n; ++j) row[j] = Rat(f.plane.coefficients[j]);
                normals.push_back(std::move(row));
            }
        if (!normals.empty() && matrix_rank(normals) == n) out.push_back(static_cast<int>(i));
    }
    return out;
}

FaceLattice::FaceLattice(int ambient_dim, std::vector<Face> faces,
                         std::vector<std::pair<int, int>> covers)
    : ambient_dim_(ambient_dim), faces_(std::move(faces)), covers_(std::move(covers)) {}

int FaceLattice::dimension() const {
    int d = 0;
    for (const auto& f : faces_) d = std::max(d, f.rank);
    return d;
}

std::vector<int> FaceLattice::f_vector() const {
    std::vector<int> f(dimension() + 1, 0);
    for (const auto& face : faces_) ++f[face.rank];
    return f;
}

int FaceLattice::facet_count() const {
    int d = dimension();
    int c = 0;
    for (const auto& f : faces_)
        if (f.rank == d - 1) ++c;
    return c;
}

int FaceLattice::vertex_count() const {
    int c = 0;
    for (const auto& f : faces_)
        if (f.rank == 0) ++c;
    return c;
}

std::optional<int> FaceLattice::face_index(const std::vector<int>& vertices) const {
    for (size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].vertices == vertices) return static_cast<int>(i);
    return std::nullopt;
}

RankedPoset FaceLattice::to_poset() const {
    return RankedPoset(static_cast<int>(faces_.size()), covers_);
}

void FaceLattice::validate() const {
    int d = dimension();
    int tops = 0;
    for (const auto& f : faces_)
        if (f.rank == d) ++tops;
    if (tops != 1) throw std::logic_error("face lattice does not have a unique top");
    RankedPoset p = to_poset();
    for (size_t i = 0; i < faces_.size(); ++i) {
        if (p.rank(static_cast<int>(i)) != faces_[i].rank)
            throw std::logic_error("face lattice is not graded by affine dimension");
        if (faces_[i].rank == 0 && faces_[i].vertices.size() != 1)
            throw std::logic_error("minimal face is not a single vertex");
    }
    // diamond property at the top: each ridge lies in exactly two facets
    if (d >= 1) {
        for (size_t i = 0; i < faces_.size(); ++i)
            if (faces_[i].rank == d - 2 && d >= 2) {
                int above = 0;
                for (auto [c, par] : covers_)
                    if (c == static_cast<int>(i) && faces_[par].rank == d - 1) ++above;
                if (above != 2) throw std::logic_error("ridge not contained in exactly two facets");
            }
    }
}

namespace {

using VertexSet = std::vector<std::uint64_t>;

VertexSet make_set(const std::vector<int>& idx, size_t words) {
    VertexSet s(words, 0);
    for (int i : idx) s[i / 64] |= 1ull << (i % 64);
    return s;
}

std::vector<int> set_members(const VertexSet& s) {
    std::vector<int> out;
    for (size_t w = 0; w < s.size(); ++w)
        for (std::uint64_t b = s[w]; b; b &= b - 1)
            out.push_back(static_cast<int>(w * 64 + __builtin_ctzll(b)));
    return out;
}

bool subset(const VertexSet& a, const VertexSet& b) {
    for (size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

} // namespace

FaceLattice face_lattice(const std::vector<RatPoint>& points, const std::vector<Facet>& facets) {
    size_t nv = points.size();
    size_t words = (nv + 63) / 64;

    std::set<VertexSet> pool;
    for (const auto& f : facets) pool.insert(make_set(f.incident, words));

    // closure under pairwise intersection
    std::vector<VertexSet> work(pool.begin(), pool.end());
    for (size_t i = 0; i < work.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            VertexSet x(words);
            bool empty = true;
            for (size_t w = 0; w < words; ++w) {
                x[w] = work[i][w] & work[j][w];
                if (x[w]) empty = false;
            }
            if (!empty && pool.insert(x).second) work.push_back(std::move(x));
        }

    std::vector<int> all(nv);
    std::iota(all.begin(), all.end(), 0);
    pool.insert(make_set(all, words));

    std::vector<Face> faces;
    for (const auto& s : pool) {
        Face f;
        f.vertices = set_members(s);
        std::vector<RatPoint> pts;
        for (int i : f.vertices) pts.push_back(points[i]);
        f.rank = affine_dimension(pts);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return std::tie(a.rank, a.vertices) < std::tie(b.rank, b.vertices);
    });

    std::vector<VertexSet> sets;
    for (const auto& f : faces) sets.push_back(make_set(f.vertices, words));

    std::vector<std::pair<int, int>> covers;
    for (size_t i = 0; i < faces.size(); ++i)
        for (size_t j = 0; j < faces.size(); ++j)
            if (faces[j].rank == faces[i].rank + 1 && subset(sets[i], sets[j]))
                covers.emplace_back(static_cast<int>(i), static_cast<int>(j));

    int ambient = points.empty() ? 0 : static_cast<int>(points[0].size());
    return FaceLattice(ambient, std::move(faces), std::move(covers));
}

std::vector<RatPoint> dedupe_points(std::vector<RatPoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

std::vector<RatPoint> affine_hull_coordinates(const std::vector<RatPoint>& points) {
    if (points.empty()) throw std::invalid_argument("no points");
    size_t n = points[0].size();

    // independent difference vectors, found greedily
    std::vector<std::vector<Rat>> basis;
    for (size_t i = 1; i < points.size(); ++i) {
        std::vector<Rat> d(n);
        for (size_t j = 0; j < n; ++j) d[j] = points[i][j] - points[0][j];
        auto trial = basis;
        trial.push_back(d);
        if (matrix_rank(trial) > static_cast<int>(basis.size())) basis.push_back(std::move(d));
    }
    size_t d = basis.size();
    if (d == 0) return std::vector<RatPoint>(points.size(), RatPoint{});

    // pivot columns where the basis restricted is invertible
    std::vector<size_t> cols;
    {
        auto m = basis;
        size_t r = 0;
        for (size_t c = 0; c < n && r < d; ++c) {
            size_t pivot = r;
            while (pivot < d && m[pivot][c] == 0) ++pivot;
            if (pivot == d) continue;
            std::swap(m[r], m[pivot]);
            for (size_t i = 0; i < d; ++i) {
                if (i == r || m[i][c] == 0) continue;
                Rat factor = m[i][c] / m[r][c];
                for (size_t j = c; j < n; ++j) m[i][j] -= factor * m[r][j];
            }
            cols.push_back(c);
            ++r;
        }
    }

    std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d));
    for (size_t k = 0; k < d; ++k)
        for (size_t j = 0; j < d; ++j) a[k][j] = basis[j][cols[k]];

    std::vector<RatPoint> out;
    for (const auto& p : points) {
        std::vector<Rat> b(d);
        for (size_t k = 0; k < d; ++k) b[k] = p[cols[k]] - points[0][cols[k]];
        auto y = solve_square(a, b);
        if (!y) throw std::logic_error("affine coordinate solve failed");
        out.push_back(std::move(*y));
    }
    return out;
}

FaceLattice brute_force_lattice(const std::vector<RatPoint>& raw) {
    auto points = dedupe_points(raw);
    auto intrinsic = affine_hull_coordinates(points);
    if (intrinsic[0].empty()) {
        // a single point: one face of rank 0
        return FaceLattice(0, {Face{{0}, 0}}, {});
    }
    auto facets = brute_force_facets(intrinsic);
    auto extreme = extreme_point_indices(intrinsic, facets);
    if (extreme.size() != intrinsic.size()) {
        std::vector<RatPoint> verts;
        for (int i : extreme) verts.push_back(intrinsic[i]);
        facets = brute_force_facets(verts);
        intrinsic = std::move(verts);
    }
    return face_lattice(intrinsic, facets);
}

LatticeIsomorphism lattice_isomorphic(const RankedPoset& a, const RankedPoset& b) {
    auto w = poset_isomorphism(a, b);
    if (!w) return {false, {}};
    return {true, std::move(*w)};
}

LatticeIsomorphism lattice_isomorphic(const FaceLattice& a, const FaceLattice& b) {
    return lattice_isomorphic(a.to_poset(), b.to_poset());
}

std::vector<RatPoint> minkowski_sum(const std::vector<RatPoint>& a,
                                    const std::vector<RatPoint>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("empty summand");
    if (a[0].size() != b[0].size()) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<RatPoint> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            RatPoint s(x.size());
            for (size_t i = 0; i < s.size(); ++i) s[i] = x[i] + y[i];
            out.push_back(std::move(s));
        }
    return dedupe_points(std::move(out));
}

} // namespace tubex
