#include "shatter/svg.hpp"

#include <algorithm>
#include <sstream>

namespace shatter {

namespace {

constexpr const char* kPalette[10] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                      "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

struct Frame {
  Rat x0, y0, x1, y1;

  std::string fx(const Rat& x) const { return rat_to_fixed(x, 4); }
  std::string fy(const Rat& y) const { return rat_to_fixed(Rat(y1 + y0 - y), 4); }  // flip
};

bool inside(const Halfplane& h, const Pt& p) { return halfplane_contains(h, p); }

Pt line_hit(const Halfplane& h, const Pt& a, const Pt& b) {
  Rat denom = h.a * (b.x - a.x) + h.b * (b.y - a.y);
  Rat t = (h.c - h.a * a.x - h.b * a.y) / denom;
  return Pt{Rat(a.x + t * (b.x - a.x)), Rat(a.y + t * (b.y - a.y))};
}

/// Rectangle clipped against one closed halfplane (Sutherland-Hodgman step).
std::vector<Pt> clip_rect(const Frame& fr, const Halfplane& h) {
  std::vector<Pt> poly = {Pt{fr.x0, fr.y0}, Pt{fr.x1, fr.y0}, Pt{fr.x1, fr.y1}, Pt{fr.x0, fr.y1}};
  std::vector<Pt> out;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Pt& cur = poly[i];
    const Pt& nxt = poly[(i + 1) % poly.size()];
    bool cin = inside(h, cur), nin = inside(h, nxt);
    if (cin) out.push_back(cur);
    if (cin != nin) out.push_back(line_hit(h, cur, nxt));
  }
  return out;
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  const Family& f = spec.family;
  Frame fr;
  if (spec.viewport) {
    fr = Frame{(*spec.viewport)[0], (*spec.viewport)[1], (*spec.viewport)[2], (*spec.viewport)[3]};
  } else {
    bool first = true;
    for (const auto& b : f.bodies) {
      for (const auto& p : b.vertices) {
        if (first) {
          fr = Frame{p.x, p.y, p.x, p.y};
          first = false;
        } else {
          fr.x0 = std::min(fr.x0, p.x);
          fr.y0 = std::min(fr.y0, p.y);
          fr.x1 = std::max(fr.x1, p.x);
          fr.y1 = std::max(fr.y1, p.y);
        }
      }
    }
    if (first) {
      fr = Frame{Rat(0), Rat(0), Rat(1), Rat(1)};
    } else {
      Rat margin = std::max(Rat(1), Rat((fr.x1 - fr.x0 + fr.y1 - fr.y0) / 10));
      fr.x0 -= margin;
      fr.y0 -= margin;
      fr.x1 += margin;
      fr.y1 += margin;
    }
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fr.fx(fr.x0)
      << " " << rat_to_fixed(fr.y0, 4) << " " << rat_to_fixed(Rat(fr.x1 - fr.x0), 4) << " "
      << rat_to_fixed(Rat(fr.y1 - fr.y0), 4) << "\">\n";
  const std::string sw = rat_to_fixed(spec.stroke_width, 4);

  // shaded halfplane sides under everything
  for (const auto& w : spec.witnesses) {
    std::vector<Pt> shade = clip_rect(fr, w.halfplane);
    if (shade.size() < 3) continue;
    svg << "  <polygon class=\"witness-shade\" fill=\"#000000\" fill-opacity=\"0.05\" points=\"";
    for (size_t i = 0; i < shade.size(); ++i) {
      if (i) svg << " ";
      svg << fr.fx(shade[i].x) << "," << fr.fy(shade[i].y);
    }
    svg << "\"/>\n";
  }

  for (const auto& b : f.bodies) {
    const char* color = kPalette[b.id % 10];
    if (b.kind() == BodyKind::Point) {
      svg << "  <circle class=\"body\" cx=\"" << fr.fx(b.vertices[0].x) << "\" cy=\""
          << fr.fy(b.vertices[0].y) << "\" r=\"" << rat_to_fixed(Rat(spec.stroke_width * 2), 4)
          << "\" fill=\"" << color << "\"/>\n";
    } else if (b.kind() == BodyKind::Segment) {
      svg << "  <line class=\"body\" x1=\"" << fr.fx(b.vertices[0].x) << "\" y1=\""
          << fr.fy(b.vertices[0].y) << "\" x2=\"" << fr.fx(b.vertices[1].x) << "\" y2=\""
          << fr.fy(b.vertices[1].y) << "\" stroke=\"" << color << "\" stroke-width=\"" << sw
          << "\" stroke-linecap=\"round\"/>\n";
    } else {
      svg << "  <polygon class=\"body\" points=\"";
      for (size_t i = 0; i < b.vertices.size(); ++i) {
        if (i) svg << " ";
        svg << fr.fx(b.vertices[i].x) << "," << fr.fy(b.vertices[i].y);
      }
      svg << "\" fill=\"" << color << "\" fill-opacity=\"0.35\" stroke=\"" << color
          << "\" stroke-width=\"" << sw << "\"/>\n";
    }
  }

  // witness boundary lines across the viewport
  for (const auto& w : spec.witnesses) {
    std::vector<Pt> shade = clip_rect(fr, w.halfplane);
    std::vector<Pt> on_line;
    for (const auto& p : shade) {
      if (w.halfplane.a * p.x + w.halfplane.b * p.y == w.halfplane.c) on_line.push_back(p);
    }
    std::sort(on_line.begin(), on_line.end(), lex_less);
    on_line.erase(std::unique(on_line.begin(), on_line.end()), on_line.end());
    if (on_line.size() < 2) continue;
    svg << "  <line class=\"witness-line\" x1=\"" << fr.fx(on_line.front().x) << "\" y1=\""
        << fr.fy(on_line.front().y) << "\" x2=\"" << fr.fx(on_line.back().x) << "\" y2=\""
        << fr.fy(on_line.back().y) << "\" stroke=\"#333333\" stroke-width=\""
        << rat_to_fixed(Rat(spec.stroke_width / 2), 4) << "\" stroke-dasharray=\"0.3,0.2\"/>\n";
  }

  for (const auto& b : f.bodies) {
    Rat cx(0), cy(0);
    for (const auto& p : b.vertices) {
      cx += p.x;
      cy += p.y;
    }
    cx /= static_cast<long>(b.vertices.size());
    cy /= static_cast<long>(b.vertices.size());
    std::string label = std::to_string(b.id);
    if (f.ambient == Ambient::Lifted3d) label += "@" + std::to_string(f.levels[b.id]);
    svg << "  <text class=\"label\" x=\"" << fr.fx(cx) << "\" y=\"" << fr.fy(cy)
        << "\" font-size=\"" << rat_to_fixed(Rat(spec.stroke_width * 5), 4)
        << "\" text-anchor=\"middle\">" << label << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace shatter
