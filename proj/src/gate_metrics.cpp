#include "spinholo/gate_metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "spinholo/errors.hpp"

namespace spinholo {

namespace {

using std::numbers::pi;
constexpr double kUnitaryTol = 1e-10;
constexpr double kGeomTol = 1e-9;

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

void require_unitary_4x4(const CMatrix& u, const char* who) {
  if (u.rows() != 4 || u.cols() != 4) {
    throw std::invalid_argument(std::string(who) + ": expected a 4x4 matrix");
  }
  const double defect = unitarity_defect(u);
  if (defect > kUnitaryTol) {
    std::ostringstream msg;
    msg << who << ": input not unitary (defect " << defect << ")";
    throw NonUnitaryInput(msg.str());
  }
}

CMatrix magic_square(const CMatrix& u) {
  const CMatrix& q = magic_basis();
  const CMatrix ub = q.adjoint() * u * q;
  return ub.transpose() * ub;
}

// Vertices L, M, N, P, Q, A2 of the perfect-entangler polyhedron.
const std::vector<Vec3>& perfect_vertices() {
  static const std::vector<Vec3> v{
      {pi / 2, 0, 0},              // L
      {3 * pi / 4, pi / 4, 0},     // M
      {3 * pi / 4, pi / 4, pi / 4},  // N
      {pi / 4, pi / 4, pi / 4},    // P
      {pi / 4, pi / 4, 0},         // Q
      {pi / 2, pi / 2, 0},         // A2
  };
  return v;
}

struct HalfSpace {
  Vec3 normal;  // unit, pointing inward
  double offset;  // inside: dot(normal, p) >= offset
};

// Facets of the convex hull, found by testing every vertex triple as a
// supporting plane.
std::vector<HalfSpace> hull_half_spaces(const std::vector<Vec3>& v) {
  std::vector<HalfSpace> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      for (std::size_t k = j + 1; k < v.size(); ++k) {
        Vec3 n = cross(sub(v[j], v[i]), sub(v[k], v[i]));
        const double len = norm(n);
        if (len < 1e-12) continue;
        n = {n[0] / len, n[1] / len, n[2] / len};
        bool any_pos = false;
        bool any_neg = false;
        for (const auto& p : v) {
          const double s = dot(n, sub(p, v[i]));
          any_pos |= s > 1e-12;
          any_neg |= s < -1e-12;
        }
        if (any_pos && any_neg) continue;
        if (any_neg) n = {-n[0], -n[1], -n[2]};
        const double off = dot(n, v[i]);
        const bool seen = std::any_of(out.begin(), out.end(), [&](const HalfSpace& h) {
          return norm(sub(h.normal, n)) < 1e-12 && std::abs(h.offset - off) < 1e-12;
        });
        if (!seen) out.push_back({n, off});
      }
    }
  }
  return out;
}

double distance_to_segment(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = sub(b, a);
  const double t = std::clamp(dot(sub(p, a), ab) / dot(ab, ab), 0.0, 1.0);
  const Vec3 closest{a[0] + t * ab[0], a[1] + t * ab[1], a[2] + t * ab[2]};
  return norm(sub(p, closest));
}

}  // namespace

std::string_view to_string(EntanglerClass c) {
  switch (c) {
    case EntanglerClass::local: return "local";
    case EntanglerClass::entangling: return "entangling";
    case EntanglerClass::perfect: return "perfect";
    case EntanglerClass::special_perfect: return "special_perfect";
  }
  return "local";
}

const CMatrix& magic_basis() {
  static const CMatrix q = [] {
    const Complex i{0.0, 1.0};
    CMatrix m(4, 4);
    m << 1.0, 0.0, 0.0, i,
         0.0, i, 1.0, 0.0,
         0.0, i, -1.0, 0.0,
         1.0, 0.0, 0.0, -i;
    return CMatrix(m / std::sqrt(2.0));
  }();
  return q;
}

MakhlinInvariants makhlin_invariants(const CMatrix& u) {
  require_unitary_4x4(u, "makhlin_invariants");
  const CMatrix m = magic_square(u);
  const Complex det = u.determinant();
  const Complex tr = m.trace();
  const Complex tr2 = (m * m).trace();
  MakhlinInvariants g;
  g.g1 = tr * tr / (16.0 * det);
  g.g2 = ((tr * tr - tr2) / (4.0 * det)).real();
  return g;
}

WeylPoint canonicalize_weyl(WeylPoint raw) {
  std::array<double, 3> c{raw.c1, raw.c2, raw.c3};
  int flips = 0;
  for (double& x : c) {
    x = std::fmod(x, pi);
    if (x < 0.0) x += pi;
    if (x > pi / 2) {
      // Reflections x -> pi - x are symmetries only in pairs.
      x = pi - x;
      ++flips;
    }
  }
  std::sort(c.begin(), c.end(), std::greater<>());
  // A leftover single reflection is absorbed for free on the base (c3 = 0),
  // otherwise it moves c1 to the mirrored half of the chamber.
  if (flips % 2 == 1 && c[2] > kGeomTol) c[0] = pi - c[0];
  return {c[0], c[1], c[2]};
}

WeylPoint weyl_coordinates(const CMatrix& u) {
  require_unitary_4x4(u, "weyl_coordinates");
  const Complex det = u.determinant();
  const CMatrix su = u * std::pow(det, -0.25);
  Eigen::ComplexEigenSolver<CMatrix> eig(magic_square(su), false);
  std::array<double, 4> phase{};
  for (Eigen::Index k = 0; k < 4; ++k) phase[static_cast<std::size_t>(k)] = std::arg(eig.eigenvalues()(k));
  std::stable_sort(phase.begin(), phase.end());
  // Eigenphases of m are 2 lambda_k with lambda = ((c1-c2+c3), (c1+c2-c3),
  // -(c1+c2+c3), (-c1+c2+c3)) / 2; relabelling them only permutes and
  // sign-flips the c's, which canonicalization absorbs.
  const WeylPoint raw{0.5 * (phase[0] + phase[1]), 0.5 * (phase[1] + phase[3]),
                      0.5 * (phase[0] + phase[3])};
  return canonicalize_weyl(raw);
}

bool is_canonical(const WeylPoint& w, double tol) {
  if (w.c1 > pi + tol || w.c1 < w.c2 - tol || w.c2 < w.c3 - tol || w.c3 < -tol) return false;
  if (w.c1 + w.c2 > pi + tol) return false;
  if (w.c3 <= tol && w.c1 > pi / 2 + tol) return false;
  return true;
}

MakhlinInvariants invariants_from_weyl(const WeylPoint& w) {
  const Complex root{std::cos(w.c1) * std::cos(w.c2) * std::cos(w.c3),
                     std::sin(w.c1) * std::sin(w.c2) * std::sin(w.c3)};
  return {root * root, std::cos(2 * w.c1) + std::cos(2 * w.c2) + std::cos(2 * w.c3)};
}

double entangling_power(Complex g1) {
  return std::clamp(2.0 / 9.0 * (1.0 - std::abs(g1)), 0.0, 2.0 / 9.0);
}

EntanglerClass classify_entangler(const WeylPoint& w) {
  if (!is_canonical(w, kGeomTol)) {
    std::ostringstream msg;
    msg << "classify_entangler: (" << w.c1 << ", " << w.c2 << ", " << w.c3
        << ") is outside the canonical Weyl chamber";
    throw NonCanonicalInput(msg.str());
  }
  const Vec3 p{w.c1, w.c2, w.c3};
  if (norm(p) <= kGeomTol) return EntanglerClass::local;

  const auto& v = perfect_vertices();
  if (distance_to_segment(p, v[0], v[5]) <= kGeomTol) return EntanglerClass::special_perfect;

  static const std::vector<HalfSpace> faces = hull_half_spaces(v);
  const bool inside = std::all_of(faces.begin(), faces.end(), [&](const HalfSpace& h) {
    return dot(h.normal, p) >= h.offset - kGeomTol;
  });
  return inside ? EntanglerClass::perfect : EntanglerClass::entangling;
}

GateMetrics analyze_gate(const CMatrix& u) {
  GateMetrics m;
  const MakhlinInvariants g = makhlin_invariants(u);
  m.g1 = g.g1;
  m.g2 = g.g2;
  m.weyl = weyl_coordinates(u);
  m.ep = entangling_power(g.g1);
  m.entangler_class = classify_entangler(m.weyl);
  return m;
}

}  // namespace spinholo
