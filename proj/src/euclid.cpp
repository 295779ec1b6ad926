#include "ehrlat/euclid.hpp"

#include <fstream>
#include <sstream>

namespace ehrlat {

namespace {

const char* kPalette[8] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                           "#ff7f00", "#a65628", "#f781bf", "#999999"};
constexpr long kScale = 24;  // pixels per lattice unit

IntVec apply(const IntMatrix& m, const Int& x, const Int& y) {
  return {m.at(0, 0) * x + m.at(0, 1) * y, m.at(1, 0) * x + m.at(1, 1) * y};
}

int euclid_depth(Int a, Int b) {
  int d = 0;
  while (a != b) {
    if (a > b) a -= b;
    else b -= a;
    ++d;
  }
  return d;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

GcdCertificate gcd_certificate(const Int& a, const Int& b) {
  if (a < 1 || b < 1) throw DomainError("gcd_certificate: inputs must be positive");
  GcdCertificate cert;
  cert.a = a;
  cert.b = b;
  cert.g = gcd(a, b);
  cert.segment_points = cert.g + 1;
  Int ap = a / cert.g, bp = b / cert.g;
  // closest point below the line: b'p - a'q = 1 with 0 <= p < a'
  Int s, t, one;
  mpz_gcdext(one.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), bp.get_mpz_t(),
             ap.get_mpz_t());
  Int p = mod_floor(s, ap);
  Int q = (bp * p - 1) / ap;
  cert.closest = {p, q};
  cert.bezout = {-q, p};
  return cert;
}

SternBrocotTree stern_brocot_embedding(int depth) {
  if (depth < 0) throw DomainError("stern_brocot_embedding: negative depth");
  if (depth > 12) throw ResourceError("stern_brocot_embedding: depth above 12");
  SternBrocotTree tree;
  struct Item {
    Int v1x, v1y, v2x, v2y;
    int parent, level;
  };
  std::vector<Item> queue = {{1, 0, 0, 1, -1, 0}};
  for (size_t i = 0; i < queue.size(); ++i) {
    Item it = queue[i];
    Int cx = it.v1x + it.v2x, cy = it.v1y + it.v2y;
    tree.nodes.push_back({cx, cy, it.parent});
    int self = int(tree.nodes.size()) - 1;
    if (it.level < depth) {
      queue.push_back({it.v1x, it.v1y, cx, cy, self, it.level + 1});
      queue.push_back({cx, cy, it.v2x, it.v2y, self, it.level + 1});
    }
  }
  return tree;
}

StaircaseDecomposition staircase_decomposition(const Int& a, const Int& b) {
  if (a < 1 || b < 1) throw DomainError("staircase_decomposition: inputs must be positive");
  StaircaseDecomposition dec;
  dec.a = a;
  dec.b = b;
  Int x = a, y = b;
  IntMatrix m = IntMatrix::identity(2);
  IntMatrix shear_r(2, 2), shear_u(2, 2);  // inverses of (x,y)->(x-y,y) and (x,y)->(x,y-x)
  shear_r.at(0, 0) = 1;
  shear_r.at(0, 1) = 1;
  shear_r.at(1, 1) = 1;
  shear_u.at(0, 0) = 1;
  shear_u.at(1, 0) = 1;
  shear_u.at(1, 1) = 1;
  while (x != y) {
    if (x > y) {
      dec.pieces.push_back({apply(m, x - y, 0), y, m});
      m = m * shear_r;
      x -= y;
    } else {
      dec.pieces.push_back({{Int(0), Int(0)}, x, m});
      m = m * shear_u;
      y -= x;
    }
  }
  dec.pieces.push_back({{Int(0), Int(0)}, x, m});
  return dec;
}

std::vector<IntVec> staircase_piece_points(const StaircasePiece& piece, bool closed) {
  std::vector<IntVec> pts;
  for (Int u = 0; u <= piece.size; u += 1)
    for (Int v = 0; closed ? v <= u : v < u; v += 1) {
      IntVec w = apply(piece.transform, u, v);
      pts.push_back({piece.offset[0] + w[0], piece.offset[1] + w[1]});
    }
  return pts;
}

std::pair<std::string, std::string> emit_plot(PlotKind kind, const PlotParams& params,
                                              const std::string& base) {
  std::ostringstream csv, svg;
  auto px = [](const Int& v) { return v.get_si() * kScale; };

  if (kind == PlotKind::GcdRays) {
    if (params.bound < 1) throw DomainError("emit_plot: bound must be positive");
    long w = (params.bound + 1) * kScale;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << w << "\" viewBox=\"0 0 " << w << " " << w << "\">\n";
    csv << "x,y,depth\n";
    for (long a = 1; a <= params.bound; ++a)
      for (long b = 1; b <= params.bound; ++b) {
        if (gcd(a, b) != 1) continue;
        int d = euclid_depth(a, b);
        csv << a << "," << b << "," << d << "\n";
        svg << "  <line x1=\"0\" y1=\"" << w << "\" x2=\"" << a * kScale << "\" y2=\""
            << w - b * kScale << "\" stroke=\"" << kPalette[d % 8] << "\"/>\n";
      }
    svg << "</svg>\n";
  } else if (kind == PlotKind::SternBrocot) {
    auto tree = stern_brocot_embedding(params.depth);
    Int maxc = 1;
    for (const auto& n : tree.nodes) maxc = std::max(maxc, Int(std::max(n.x, n.y)));
    long w = (maxc.get_si() + 1) * kScale;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << w << "\" viewBox=\"0 0 " << w << " " << w << "\">\n";
    csv << "x,y,parent_x,parent_y\n";
    for (const auto& n : tree.nodes) {
      const auto& p = n.parent < 0 ? n : tree.nodes[n.parent];
      csv << n.x << "," << n.y << "," << p.x << "," << p.y << "\n";
      if (n.parent >= 0)
        svg << "  <line x1=\"" << px(p.x) << "\" y1=\"" << w - px(p.y) << "\" x2=\""
            << px(n.x) << "\" y2=\"" << w - px(n.y) << "\" stroke=\"#999999\"/>\n";
      svg << "  <circle cx=\"" << px(n.x) << "\" cy=\"" << w - px(n.y)
          << "\" r=\"4\" fill=\"#377eb8\"/>\n";
    }
    svg << "</svg>\n";
  } else {
    auto dec = staircase_decomposition(params.a, params.b);
    long w = (dec.a.get_si() + 1) * kScale;
    long h = (dec.b.get_si() + 1) * kScale;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    csv << "piece,px,py,c,m00,m01,m10,m11\n";
    for (size_t i = 0; i < dec.pieces.size(); ++i) {
      const auto& pc = dec.pieces[i];
      const auto& t = pc.transform;
      csv << i << "," << pc.offset[0] << "," << pc.offset[1] << "," << pc.size << ","
          << t.at(0, 0) << "," << t.at(0, 1) << "," << t.at(1, 0) << "," << t.at(1, 1)
          << "\n";
      IntVec c1 = apply(t, pc.size, 0), c2 = apply(t, pc.size, pc.size);
      svg << "  <polygon points=\"" << px(pc.offset[0]) << "," << h - px(pc.offset[1])
          << " " << px(pc.offset[0] + c1[0]) << "," << h - px(pc.offset[1] + c1[1])
          << " " << px(pc.offset[0] + c2[0]) << "," << h - px(pc.offset[1] + c2[1])
          << "\" fill=\"none\" stroke=\"" << kPalette[i % 8] << "\"/>\n";
    }
    svg << "</svg>\n";
  }

  std::string svg_path = base + ".svg", csv_path = base + ".csv";
  write_file(svg_path, svg.str());
  write_file(csv_path, csv.str());
  return {svg_path, csv_path};
}

}  // namespace ehrlat
