#include "weylfold/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "weylfold/convexity.hpp"
#include "weylfold/galleries.hpp"

namespace weylfold {

namespace {

double to_d(const Rat& r) { return double(r.num()) / double(r.den()); }

struct Embed {
  // columns of the basis map: simple-root coordinates -> plane
  double e1x, e1y, e2x, e2y;
  // inverse transpose rows for pairing functionals
  double i11, i12, i21, i22;

  explicit Embed(const RootSystem& rs) {
    double b11 = to_d(rs.form(0, 0)), b12 = to_d(rs.form(0, 1)), b22 = to_d(rs.form(1, 1));
    double l1 = std::sqrt(b11), l2 = std::sqrt(b22);
    double c = b12 / (l1 * l2);
    double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    e1x = l1;
    e1y = 0.0;
    e2x = l2 * c;
    e2y = l2 * s;
    double det = e1x * e2y - e2x * e1y;
    i11 = e2y / det;
    i12 = -e2x / det;
    i21 = -e1y / det;
    i22 = e1x / det;
  }

  void map(double x0, double x1, double& u, double& v) const {
    u = x0 * e1x + x1 * e2x;
    v = x0 * e1y + x1 * e2y;
  }
  void map(const VecQ& x, double& u, double& v) const { map(to_d(x[0]), to_d(x[1]), u, v); }
};

}  // namespace

void render_svg(const RootSystem& rs, const VecQ& lambda, const std::string& path) {
  if (rs.rank != 2) throw std::invalid_argument("render supports rank-2 kinds only");

  Embed em(rs);
  auto hull = dconv_hull(rs, lambda);
  Gallery mg = minimal_gallery(rs, lambda);
  auto ends = folded_endpoints(rs, gallery_type(rs, mg));

  // path through alcove barycenters
  std::vector<std::pair<double, double>> walk;
  if (!mg.degenerate) {
    auto bary = [&](const Alcove& a) {
      double u, v;
      em.map(double(a.bary_num[0]) / double(rs.bary_den),
             double(a.bary_num[1]) / double(rs.bary_den), u, v);
      walk.push_back({u, v});
    };
    bary(mg.first);
    for (const GalleryStep& st : mg.steps) bary(st.alcove);
  }

  double radius = 1.0;
  auto grow = [&](double u, double v) { radius = std::max(radius, std::hypot(u, v)); };
  for (const VecQ& p : ends) {
    double u, v;
    em.map(p, u, v);
    grow(u, v);
  }
  for (auto [u, v] : walk) grow(u, v);
  radius = radius * 1.25 + 0.5;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(4);
  out << std::fixed;

  double vb = radius;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\""
      << -vb << " " << -vb << " " << 2 * vb << " " << 2 * vb << "\">\n";
  out << "<rect x=\"" << -vb << "\" y=\"" << -vb << "\" width=\"" << 2 * vb << "\" height=\""
      << 2 * vb << "\" fill=\"white\"/>\n";
  out << "<g transform=\"scale(1,-1)\">\n";  // mathematical orientation

  // wall arrangement: for each positive root, the lines <x,alpha^vee> = k
  double thin = 0.006 * radius;
  for (int a = 0; a < rs.num_positive(); ++a) {
    double g1 = rs.coroot_pairing(a, 0) * em.i11 + rs.coroot_pairing(a, 1) * em.i21;
    double g2 = rs.coroot_pairing(a, 0) * em.i12 + rs.coroot_pairing(a, 1) * em.i22;
    double norm = std::hypot(g1, g2);
    int kmax = int(std::ceil(norm * radius * 1.5));
    for (int k = -kmax; k <= kmax; ++k) {
      // point on the line closest to the origin, direction along the line
      double px = g1 * k / (norm * norm), py = g2 * k / (norm * norm);
      double dx = -g2 / norm, dy = g1 / norm;
      double t = 3.0 * radius;
      out << "<line x1=\"" << px - t * dx << "\" y1=\"" << py - t * dy << "\" x2=\""
          << px + t * dx << "\" y2=\"" << py + t * dy
          << "\" stroke=\"#cccccc\" stroke-width=\"" << (k == 0 ? 2 * thin : thin) << "\"/>\n";
    }
  }

  // dual hull box (a parallelogram in the embedding)
  {
    double cs[4][2];
    const Rat& l0 = hull.lower[0];
    const Rat& l1 = hull.lower[1];
    const Rat& u0 = hull.upper[0];
    const Rat& u1 = hull.upper[1];
    em.map(to_d(l0), to_d(l1), cs[0][0], cs[0][1]);
    em.map(to_d(u0), to_d(l1), cs[1][0], cs[1][1]);
    em.map(to_d(u0), to_d(u1), cs[2][0], cs[2][1]);
    em.map(to_d(l0), to_d(u1), cs[3][0], cs[3][1]);
    out << "<polygon points=\"";
    for (auto& c : cs) out << c[0] << "," << c[1] << " ";
    out << "\" fill=\"#1f77b4\" fill-opacity=\"0.08\" stroke=\"#1f77b4\" stroke-width=\"" << thin
        << "\" stroke-dasharray=\"" << 6 * thin << "," << 4 * thin << "\"/>\n";
  }

  if (walk.size() > 1) {
    out << "<polyline points=\"";
    for (auto [u, v] : walk) out << u << "," << v << " ";
    out << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" << 2 * thin << "\"/>\n";
  }

  double r_end = 0.018 * radius, r_orb = 0.026 * radius;
  for (const VecQ& p : ends) {
    double u, v;
    em.map(p, u, v);
    out << "<circle cx=\"" << u << "\" cy=\"" << v << "\" r=\"" << r_end
        << "\" fill=\"#2ca02c\"/>\n";
  }
  for (const VecQ& p : hull.orbit) {
    double u, v;
    em.map(p, u, v);
    out << "<circle cx=\"" << u << "\" cy=\"" << v << "\" r=\"" << r_orb
        << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" << 2 * thin << "\"/>\n";
  }
  out << "<circle cx=\"0\" cy=\"0\" r=\"" << r_end << "\" fill=\"#000000\"/>\n";

  out << "</g>\n</svg>\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace weylfold
