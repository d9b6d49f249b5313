#include "linknav/svg.hpp"

#include "linknav/error.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>

namespace linknav {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

struct Style {
  double bar, joint;
};

Style style_for(const ViewBox& box) {
  const double s = std::max(box.width, box.height);
  return {s * 0.006, s * 0.01};
}

std::string header(const ViewBox& box) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(box.x) + " " + num(box.y) + " " + num(box.width) +
         " " + num(box.height) + "\" width=\"640\" height=\"" + num(640.0 * box.height / box.width) + "\">\n" +
         "<rect x=\"" + num(box.x) + "\" y=\"" + num(box.y) + "\" width=\"" + num(box.width) + "\" height=\"" +
         num(box.height) + "\" fill=\"white\"/>\n";
}

// Screen coordinates: y flipped so the diagram reads y-up.
double sx(const Point& p) { return p.x; }
double sy(const Point& p) { return -p.y; }

}  // namespace

ViewBox common_viewbox(const std::vector<const Configuration*>& frames) {
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x, hi_x = -lo_x, hi_y = -lo_x;
  for (const Configuration* f : frames) {
    for (const Point& p : f->points) {
      lo_x = std::min(lo_x, sx(p));
      hi_x = std::max(hi_x, sx(p));
      lo_y = std::min(lo_y, sy(p));
      hi_y = std::max(hi_y, sy(p));
    }
  }
  if (!(lo_x <= hi_x)) return {};
  const double w = std::max(hi_x - lo_x, 1e-9), h = std::max(hi_y - lo_y, 1e-9);
  const double pad = 0.05 * std::max(w, h);
  return {lo_x - pad, lo_y - pad, w + 2 * pad, h + 2 * pad};
}

std::string render_frame_svg(const Configuration& c, const ViewBox& box) {
  const Style st = style_for(box);
  std::string out = header(box);
  const std::size_t n = c.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = c.points[i], b = c.points[(i + 1) % n];
    const bool first = i == 0;
    out += "<line x1=\"" + num(sx(a)) + "\" y1=\"" + num(sy(a)) + "\" x2=\"" + num(sx(b)) + "\" y2=\"" + num(sy(b)) +
           "\" stroke=\"" + (first ? "#d62728" : "#1f77b4") + "\" stroke-width=\"" + num(first ? 2 * st.bar : st.bar) +
           "\" stroke-linecap=\"round\"/>\n";
  }
  for (const Point& p : c.points)
    out += "<circle cx=\"" + num(sx(p)) + "\" cy=\"" + num(sy(p)) + "\" r=\"" + num(st.joint) + "\" fill=\"#333333\"/>\n";
  return out + "</svg>\n";
}

std::string render_animated_svg(const std::vector<const Configuration*>& frames, const ViewBox& box, double fps) {
  if (frames.empty()) throw InputError(ErrorCode::InvalidInput, "no frames to animate");
  const Style st = style_for(box);
  const std::size_t n = frames.front()->points.size();
  const std::string dur = num(static_cast<double>(frames.size()) / fps) + "s";
  auto values = [&](auto&& coord) {
    std::string v;
    for (std::size_t k = 0; k < frames.size(); ++k) {
      if (k) v += ';';
      v += num(coord(*frames[k]));
    }
    return v;
  };
  auto animate = [&](const char* attr, const std::string& vals) {
    return std::string("<animate attributeName=\"") + attr + "\" values=\"" + vals + "\" dur=\"" + dur +
           "\" repeatCount=\"indefinite\" calcMode=\"discrete\"/>";
  };
  std::string out = header(box);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const Point a = frames.front()->points[i], b = frames.front()->points[j];
    const bool first = i == 0;
    out += "<line x1=\"" + num(sx(a)) + "\" y1=\"" + num(sy(a)) + "\" x2=\"" + num(sx(b)) + "\" y2=\"" + num(sy(b)) +
           "\" stroke=\"" + (first ? "#d62728" : "#1f77b4") + "\" stroke-width=\"" + num(first ? 2 * st.bar : st.bar) +
           "\" stroke-linecap=\"round\">";
    out += animate("x1", values([&](const Configuration& c) { return sx(c.points[i]); }));
    out += animate("y1", values([&](const Configuration& c) { return sy(c.points[i]); }));
    out += animate("x2", values([&](const Configuration& c) { return sx(c.points[j]); }));
    out += animate("y2", values([&](const Configuration& c) { return sy(c.points[j]); }));
    out += "</line>\n";
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = frames.front()->points[i];
    out += "<circle cx=\"" + num(sx(p)) + "\" cy=\"" + num(sy(p)) + "\" r=\"" + num(st.joint) + "\" fill=\"#333333\">";
    out += animate("cx", values([&](const Configuration& c) { return sx(c.points[i]); }));
    out += animate("cy", values([&](const Configuration& c) { return sy(c.points[i]); }));
    out += "</circle>\n";
  }
  return out + "</svg>\n";
}

RenderResult render_motion(const Motion& m, const std::filesystem::path& dir, double fps, bool animated) {
  std::vector<const Configuration*> frames;
  for (const auto& s : m.segments)
    for (const auto& f : s.frames) frames.push_back(&f);
  if (frames.empty()) throw InputError(ErrorCode::InvalidInput, "motion has no frames");
  if (!(fps > 0)) throw InputError(ErrorCode::InvalidInput, "fps must be positive");
  RenderResult out;
  out.box = common_viewbox(frames);
  std::filesystem::create_directories(dir);
  auto write = [&](const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw InputError(ErrorCode::InvalidInput, "cannot write " + p.string());
    f << text;
    out.files.push_back(p);
  };
  for (std::size_t k = 0; k < frames.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%05zu.svg", k);
    write(dir / name, render_frame_svg(*frames[k], out.box));
  }
  if (animated) write(dir / "motion.svg", render_animated_svg(frames, out.box, fps));
  return out;
}

}  // namespace linknav
