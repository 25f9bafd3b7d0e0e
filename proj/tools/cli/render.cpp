#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "troploc/error.hpp"

namespace troploc::cli {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Ray {
  std::vector<long> coords;
  std::string label;
};

struct PictureCone {
  std::vector<std::size_t> rays;  // indices into FanPicture::rays
  bool maximal = false;
};

struct FanPicture {
  std::size_t rank = 0;
  std::vector<Ray> rays;
  std::vector<PictureCone> cones;
};

long to_long(const json& j) {
  if (j.is_number_integer()) return j.get<long>();
  Integer v = parse_integer(j, "");
  require(v.fits_slong_p(), Errc::invalid_input, "coordinate too large to draw");
  return v.get_si();
}

std::string ray_label(const std::vector<long>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

FanPicture fan_picture(const json& doc) {
  FanPicture pic;
  pic.rank = doc.at("rank").get<std::size_t>();
  std::vector<std::size_t> maximal_list;
  const bool newton = doc.at("kind") == "newton_fan";
  if (newton) maximal_list = doc.at("maximal").get<std::vector<std::size_t>>();
  const json& cones = doc.at("cones");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    PictureCone pc;
    pc.maximal = newton ? std::binary_search(maximal_list.begin(), maximal_list.end(), i)
                        : cones[i].value("maximal", true);
    for (const auto& r : cones[i].at("rays")) {
      std::vector<long> c;
      for (const auto& x : r) c.push_back(to_long(x));
      auto it = std::find_if(pic.rays.begin(), pic.rays.end(),
                             [&](const Ray& q) { return q.coords == c; });
      if (it == pic.rays.end()) {
        pic.rays.push_back({c, ray_label(c)});
        it = pic.rays.end() - 1;
      }
      pc.rays.push_back(static_cast<std::size_t>(it - pic.rays.begin()));
    }
    pic.cones.push_back(std::move(pc));
  }
  return pic;
}

class Svg {
 public:
  Svg() {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kSize) << "\" height=\""
         << num(kSize) << "\" viewBox=\"0 0 " << num(kSize) << " " << num(kSize) << "\">\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }
  std::ostringstream& raw() { return out_; }
  void line(double x1, double y1, double x2, double y2, const std::string& style) {
    out_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\""
         << num(y2) << "\" " << style << "/>\n";
  }
  void circle(double x, double y, double r, const std::string& style) {
    out_ << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r) << "\" " << style
         << "/>\n";
  }
  void text(double x, double y, const std::string& s, const std::string& style = "") {
    out_ << "<text x=\"" << num(x) << "\" y=\"" << num(y)
         << "\" font-family=\"sans-serif\" font-size=\"11\" " << style << ">" << s << "</text>\n";
  }
  void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
    out_ << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out_ << (i ? " " : "") << num(pts[i].first) << "," << num(pts[i].second);
    }
    out_ << "\" " << style << "/>\n";
  }
  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

/// Affine map from a lattice window to the canvas.
struct Window {
  long xmin, xmax, ymin, ymax;
  double scale() const {
    return (kSize - 2 * kMargin) / static_cast<double>(std::max(xmax - xmin, ymax - ymin));
  }
  double px(double x) const { return kMargin + (x - static_cast<double>(xmin)) * scale(); }
  double py(double y) const { return kSize - kMargin - (y - static_cast<double>(ymin)) * scale(); }
};

void draw_lattice(Svg& svg, const Window& w) {
  svg.raw() << "<defs><clipPath id=\"window\"><rect x=\"" << num(w.px(w.xmin)) << "\" y=\""
            << num(w.py(w.ymax)) << "\" width=\"" << num(w.px(w.xmax) - w.px(w.xmin))
            << "\" height=\"" << num(w.py(w.ymin) - w.py(w.ymax)) << "\"/></clipPath></defs>\n";
  svg.line(w.px(w.xmin), w.py(0), w.px(w.xmax), w.py(0), "stroke=\"#888\"");
  svg.line(w.px(0), w.py(w.ymin), w.px(0), w.py(w.ymax), "stroke=\"#888\"");
  for (long x = w.xmin; x <= w.xmax; ++x) {
    for (long y = w.ymin; y <= w.ymax; ++y) svg.circle(w.px(x), w.py(y), 1.5, "fill=\"#bbb\"");
  }
}

Window window_for(const std::vector<std::vector<long>>& pts, long box) {
  Window w{0, box, 0, box};
  for (const auto& p : pts) {
    if (p[0] < 0) w.xmin = -box;
    if (p[1] < 0) w.ymin = -box;
    w.xmax = std::max(w.xmax, p[0] + 1);
    w.ymax = std::max(w.ymax, p[1] + 1);
  }
  long span = std::max(w.xmax - w.xmin, w.ymax - w.ymin);
  w.xmax = w.xmin + span;
  w.ymax = w.ymin + span;
  return w;
}

std::string render_fan2(const FanPicture& pic, const std::string& title, long box) {
  std::vector<std::vector<long>> pts;
  for (const auto& r : pic.rays) pts.push_back(r.coords);
  const Window w = window_for(pts, std::min<long>(box, 40));
  Svg svg;
  draw_lattice(svg, w);
  const double far = 4.0 * static_cast<double>(w.xmax - w.xmin);
  auto end = [&](const Ray& r) {
    const double len = std::hypot(static_cast<double>(r.coords[0]), static_cast<double>(r.coords[1]));
    return std::make_pair(w.px(far * static_cast<double>(r.coords[0]) / len),
                          w.py(far * static_cast<double>(r.coords[1]) / len));
  };
  svg.raw() << "<g clip-path=\"url(#window)\">\n";
  for (const auto& c : pic.cones) {
    if (c.rays.size() != 2) continue;
    svg.polygon({{w.px(0), w.py(0)}, end(pic.rays[c.rays[0]]), end(pic.rays[c.rays[1]])},
                "fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\"");
  }
  for (const auto& r : pic.rays) {
    auto [x, y] = end(r);
    svg.line(w.px(0), w.py(0), x, y, "stroke=\"#08519c\" stroke-width=\"2\"");
  }
  svg.raw() << "</g>\n";
  for (const auto& r : pic.rays) {
    const double x = static_cast<double>(r.coords[0]), y = static_cast<double>(r.coords[1]);
    if (x < static_cast<double>(w.xmin) || x > static_cast<double>(w.xmax) ||
        y < static_cast<double>(w.ymin) || y > static_cast<double>(w.ymax)) {
      continue;
    }
    svg.circle(w.px(x), w.py(y), 4.5, "fill=\"black\"");
    svg.text(w.px(x) + 7, w.py(y) - 7, r.label);
  }
  svg.text(kMargin, 20, title);
  return svg.finish();
}

std::string render_fan3(const FanPicture& pic, const std::string& title) {
  const std::pair<double, double> corner[3] = {
      {kMargin + 40, kSize - kMargin - 20}, {kSize - kMargin - 40, kSize - kMargin - 20},
      {kSize / 2, kMargin + 30}};
  std::vector<std::pair<double, double>> at;
  for (const auto& r : pic.rays) {
    const double s = static_cast<double>(r.coords[0] + r.coords[1] + r.coords[2]);
    double x = 0, y = 0;
    for (int i = 0; i < 3; ++i) {
      x += static_cast<double>(r.coords[static_cast<std::size_t>(i)]) / s * corner[i].first;
      y += static_cast<double>(r.coords[static_cast<std::size_t>(i)]) / s * corner[i].second;
    }
    at.emplace_back(x, y);
  }
  Svg svg;
  svg.polygon({corner[0], corner[1], corner[2]}, "fill=\"none\" stroke=\"#888\"");
  svg.text(corner[0].first, corner[0].second + 18, "e1", "text-anchor=\"middle\"");
  svg.text(corner[1].first, corner[1].second + 18, "e2", "text-anchor=\"middle\"");
  svg.text(corner[2].first, corner[2].second - 22, "e3", "text-anchor=\"middle\"");
  for (const auto& c : pic.cones) {
    if (!c.maximal) continue;
    if (c.rays.size() == 2) {
      svg.line(at[c.rays[0]].first, at[c.rays[0]].second, at[c.rays[1]].first, at[c.rays[1]].second,
               "stroke=\"#08519c\" stroke-width=\"2\"");
    } else if (c.rays.size() >= 3) {
      double cx = 0, cy = 0;
      for (auto i : c.rays) {
        cx += at[i].first;
        cy += at[i].second;
      }
      cx /= static_cast<double>(c.rays.size());
      cy /= static_cast<double>(c.rays.size());
      std::vector<std::pair<double, double>> pts;
      for (auto i : c.rays) pts.push_back(at[i]);
      std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
        return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
      });
      svg.polygon(pts, "fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#08519c\"");
    }
  }
  const double mx = (corner[0].first + corner[1].first + corner[2].first) / 3;
  for (std::size_t i = 0; i < pic.rays.size(); ++i) {
    svg.circle(at[i].first, at[i].second, 4.5, "fill=\"black\"");
    const bool left = at[i].first < mx - 1;
    svg.text(at[i].first + (left ? -8 : 8), at[i].second - 8, pic.rays[i].label,
             left ? "text-anchor=\"end\"" : "");
  }
  svg.text(kMargin, 20, title);
  return svg.finish();
}

std::string render_graph(const FanPicture& pic, const std::string& title) {
  const double cx = kSize / 2, cy = kSize / 2 + 10, radius = kSize / 2 - 90;
  std::vector<std::pair<double, double>> at;
  const double n = static_cast<double>(std::max<std::size_t>(pic.rays.size(), 1));
  for (std::size_t i = 0; i < pic.rays.size(); ++i) {
    const double a = 2 * M_PI * static_cast<double>(i) / n - M_PI / 2;
    at.emplace_back(cx + radius * std::cos(a), cy + radius * std::sin(a));
  }
  Svg svg;
  for (const auto& c : pic.cones) {
    if (!c.maximal) continue;
    if (c.rays.size() == 2) {
      svg.line(at[c.rays[0]].first, at[c.rays[0]].second, at[c.rays[1]].first, at[c.rays[1]].second,
               "stroke=\"#08519c\" stroke-width=\"2\"");
    } else if (c.rays.size() > 2) {
      double hx = 0, hy = 0;
      for (auto i : c.rays) {
        hx += at[i].first;
        hy += at[i].second;
      }
      hx /= static_cast<double>(c.rays.size());
      hy /= static_cast<double>(c.rays.size());
      for (auto i : c.rays) svg.line(hx, hy, at[i].first, at[i].second, "stroke=\"#08519c\"");
      svg.raw() << "<rect x=\"" << num(hx - 4) << "\" y=\"" << num(hy - 4)
                << "\" width=\"8.00\" height=\"8.00\" fill=\"#08519c\"/>\n";
    }
  }
  for (std::size_t i = 0; i < pic.rays.size(); ++i) {
    svg.circle(at[i].first, at[i].second, 4.5, "fill=\"black\"");
    const bool left = at[i].first < cx - 1;
    svg.text(at[i].first + (left ? -8 : 8), at[i].second - 8, pic.rays[i].label,
             left ? "text-anchor=\"end\"" : "");
  }
  svg.text(kMargin, 20, title);
  return svg.finish();
}

std::string render_polyhedron2(const json& doc, long box) {
  std::vector<std::vector<long>> vertices, points, rec;
  for (const auto& v : doc.at("vertices")) vertices.push_back({to_long(v[0]), to_long(v[1])});
  for (const auto& v : doc.at("points")) points.push_back({to_long(v[0]), to_long(v[1])});
  for (const auto& v : doc.at("recession_cone").at("rays")) rec.push_back({to_long(v[0]), to_long(v[1])});
  const Window w = window_for(points, std::min<long>(box, 40));
  Svg svg;
  draw_lattice(svg, w);

  if (rec.size() == 2 && !vertices.empty()) {
    // Orient so that r1, r2 run counterclockwise, then walk the boundary
    // from the vertex carrying r2 down to the one carrying r1.
    auto cross = [](const std::vector<long>& a, const std::vector<long>& b) {
      return a[0] * b[1] - a[1] * b[0];
    };
    if (cross(rec[0], rec[1]) < 0) std::swap(rec[0], rec[1]);
    const std::vector<long> n2 = {rec[1][1], -rec[1][0]};  // perpendicular to r2, positive on r1
    const std::vector<long> n1 = {-rec[0][1], rec[0][0]};
    auto dot = [](const std::vector<long>& a, const std::vector<long>& b) {
      return a[0] * b[0] + a[1] * b[1];
    };
    std::vector<std::vector<long>> chain = vertices;
    std::sort(chain.begin(), chain.end(), [&](const auto& a, const auto& b) {
      return dot(n2, a) != dot(n2, b) ? dot(n2, a) < dot(n2, b) : dot(n1, a) > dot(n1, b);
    });
    const double far = 4.0 * static_cast<double>(w.xmax - w.xmin);
    auto shoot = [&](const std::vector<long>& v, const std::vector<long>& r) {
      const double len = std::hypot(static_cast<double>(r[0]), static_cast<double>(r[1]));
      return std::make_pair(w.px(static_cast<double>(v[0]) + far * static_cast<double>(r[0]) / len),
                            w.py(static_cast<double>(v[1]) + far * static_cast<double>(r[1]) / len));
    };
    std::vector<std::pair<double, double>> poly;
    poly.push_back(shoot(chain.front(), rec[1]));
    for (const auto& v : chain) {
      poly.emplace_back(w.px(static_cast<double>(v[0])), w.py(static_cast<double>(v[1])));
    }
    poly.push_back(shoot(chain.back(), rec[0]));
    poly.push_back(shoot(chain.back(), {rec[0][0] + rec[1][0], rec[0][1] + rec[1][1]}));
    svg.raw() << "<g clip-path=\"url(#window)\">\n";
    svg.polygon(poly, "fill=\"#fdd0a2\" fill-opacity=\"0.6\" stroke=\"#d94801\" stroke-width=\"2\"");
    svg.raw() << "</g>\n";
  }
  for (const auto& p : points) {
    const bool vertex = std::find(vertices.begin(), vertices.end(), p) != vertices.end();
    svg.circle(w.px(static_cast<double>(p[0])), w.py(static_cast<double>(p[1])), 4.5,
               vertex ? "fill=\"black\"" : "fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"");
    svg.text(w.px(static_cast<double>(p[0])) + 7, w.py(static_cast<double>(p[1])) - 7, ray_label(p));
  }
  svg.text(kMargin, 20, "Newton polyhedron");
  return svg.finish();
}

}  // namespace

std::string render_svg(const json& doc, const RenderOptions& options) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string()) {
    fail(Errc::invalid_input, "/kind: render needs a structured output with a \"kind\"");
  }
  const std::string kind = doc.at("kind").get<std::string>();
  try {
    if (kind == "newton_polyhedron") {
      require(doc.at("rank") == 2, Errc::rank_limit, "polyhedra are drawn in rank 2 only");
      return render_polyhedron2(doc, options.box);
    }
    require(kind == "tropicalization" || kind == "newton_fan", Errc::invalid_input,
            "/kind: cannot render \"" + kind + "\"");
    FanPicture pic = fan_picture(doc);
    const std::string title = kind == "newton_fan" ? "Newton fan" : "local tropicalization";
    if (pic.rank == 2) return render_fan2(pic, title, options.box);
    if (pic.rank == 3) {
      const bool positive = std::all_of(pic.rays.begin(), pic.rays.end(), [](const Ray& r) {
        return r.coords[0] + r.coords[1] + r.coords[2] > 0;
      });
      if (positive) return render_fan3(pic, title);
    }
    return render_graph(pic, title);
  } catch (const json::exception& e) {
    fail(Errc::invalid_input, std::string("malformed ") + kind + ": " + e.what());
  }
}

}  // namespace troploc::cli
