#include "render.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ncpart::render {

namespace {

struct VLine {
  int x;
  int y0;
  int y1;
  std::size_t block;
};

struct HLine {
  int y;
  int x0;
  int x1;
  std::size_t block;
};

// Abstract grid: x is the point position (0-based), y = 0 is the upper row and y = bottom the
// lower row. Nesting levels grow away from each row; through strands change column on jog rows.
struct Layout {
  int width = 0;
  int bottom = 0;
  std::vector<VLine> vertical;
  std::vector<HLine> horizontal;
};

std::vector<int> levels(const TwoRowPartition& p, Row row) {
  std::vector<int> level(p.size(), 0);
  std::vector<std::size_t> order;
  for (std::size_t b = 0; b < p.size(); ++b)
    if (p.block(b).row(row).size() >= 2) order.push_back(b);
  // Narrow spans first, so every nested block is settled before its container.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = p.block(a).row(row);
    const auto& y = p.block(b).row(row);
    return x.back() - x.front() < y.back() - y.front();
  });
  for (std::size_t b : order) {
    const auto& pts = p.block(b).row(row);
    int inner = 0;
    for (std::size_t c : order) {
      const auto& q = p.block(c).row(row);
      if (c != b && pts.front() < q.front() && q.back() < pts.back()) inner = std::max(inner, level[c]);
    }
    level[b] = inner + 1;
  }
  return level;
}

Layout layout(const TwoRowPartition& p) {
  Layout out;
  out.width = std::max(p.k(), p.l());
  const auto up_level = levels(p, Row::Upper);
  const auto low_level = levels(p, Row::Lower);
  const int hu = up_level.empty() ? 0 : *std::max_element(up_level.begin(), up_level.end());
  const int hl = low_level.empty() ? 0 : *std::max_element(low_level.begin(), low_level.end());

  std::vector<std::size_t> right;
  std::vector<std::size_t> left;
  bool any_through = false;
  for (std::size_t b = 0; b < p.size(); ++b) {
    const Block& blk = p.block(b);
    if (!blk.is_through()) continue;
    any_through = true;
    if (blk.lower().front() > blk.upper().front()) right.push_back(b);
    if (blk.lower().front() < blk.upper().front()) left.push_back(b);
  }
  // Right-moving strands jog from the rightmost down, left-moving ones from the leftmost down.
  std::reverse(right.begin(), right.end());
  const int jogs = static_cast<int>(std::max({right.size(), left.size(), std::size_t{any_through ? 1u : 0u}}));
  out.bottom = hu + jogs + hl + 1;
  std::vector<int> jog_row(p.size(), 0);
  for (std::size_t i = 0; i < right.size(); ++i) jog_row[right[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < left.size(); ++i) jog_row[left[i]] = static_cast<int>(i);

  for (std::size_t b = 0; b < p.size(); ++b) {
    const Block& blk = p.block(b);
    int top = 0;
    int base = out.bottom;
    if (!blk.upper().empty()) {
      top = up_level[b];
      for (int i : blk.upper()) out.vertical.push_back({i - 1, 0, top, b});
      if (blk.upper().size() >= 2) out.horizontal.push_back({top, blk.upper().front() - 1, blk.upper().back() - 1, b});
    }
    if (!blk.lower().empty()) {
      base = out.bottom - low_level[b];
      for (int i : blk.lower()) out.vertical.push_back({i - 1, base, out.bottom, b});
      if (blk.lower().size() >= 2) out.horizontal.push_back({base, blk.lower().front() - 1, blk.lower().back() - 1, b});
    }
    if (!blk.is_through()) continue;
    const int cu = blk.upper().front() - 1;
    const int cl = blk.lower().front() - 1;
    if (cu == cl) {
      out.vertical.push_back({cu, top, base, b});
      continue;
    }
    const int jy = hu + 1 + jog_row[b];
    out.vertical.push_back({cu, top, jy, b});
    out.horizontal.push_back({jy, std::min(cu, cl), std::max(cu, cl), b});
    out.vertical.push_back({cl, jy, base, b});
  }
  return out;
}

std::string letter(std::size_t b) {
  const std::string here(1, static_cast<char>('A' + b % 26));
  return b < 26 ? here : letter(b / 26 - 1) + here;
}

std::string legend(const ColoredPartition& cp) {
  std::ostringstream out;
  for (std::size_t b = 0; b < cp.size(); ++b) {
    out << letter(b) << "  color=" << cp.lambda().name(cp.color(b)) << "  points=";
    bool first = true;
    for (int i : cp.block(b).upper()) out << (std::exchange(first, false) ? "" : ",") << 'U' << i;
    for (int i : cp.block(b).lower()) out << (std::exchange(first, false) ? "" : ",") << 'L' << i;
    out << '\n';
  }
  out << "lambda=" << cp.lambda().label() << " gamma=" << cp.gamma().label()
      << " boundary=" << (cp.lambda_valid() ? "ok" : "fails") << " gamma-condition=" << (cp.gamma_valid() ? "ok" : "fails")
      << '\n';
  return out.str();
}

std::size_t label_width(const ColoredPartition& cp) {
  std::size_t w = 3;
  for (const auto& g : cp.upper_colors()) w = std::max(w, cp.gamma().name(g).size());
  for (const auto& g : cp.lower_colors()) w = std::max(w, cp.gamma().name(g).size());
  return w + 1;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string ascii(const ColoredPartition& cp) {
  if (cp.k() == 0 && cp.l() == 0) return "(empty)\n" + legend(cp);
  const Layout lay = layout(cp.partition());
  const std::size_t w = label_width(cp);
  const auto col = [&](int x) { return static_cast<std::size_t>(x) * w + w / 2; };
  const std::size_t cols = static_cast<std::size_t>(lay.width) * w;
  const auto rows = static_cast<std::size_t>(lay.bottom + 1);

  enum : unsigned { N = 1, S = 2, W = 4, E = 8 };
  std::vector<std::vector<unsigned>> grid(rows, std::vector<unsigned>(cols, 0));
  for (const auto& v : lay.vertical)
    for (int y = v.y0; y <= v.y1; ++y) {
      auto& cell = grid[static_cast<std::size_t>(y)][col(v.x)];
      if (y > v.y0) cell |= N;
      if (y < v.y1) cell |= S;
      if (v.y0 == v.y1) cell |= N | S;
    }
  for (const auto& h : lay.horizontal)
    for (std::size_t c = col(h.x0); c <= col(h.x1); ++c) {
      auto& cell = grid[static_cast<std::size_t>(h.y)][c];
      if (c > col(h.x0)) cell |= W;
      if (c < col(h.x1)) cell |= E;
    }

  std::vector<std::string> lines(rows, std::string(cols, ' '));
  for (std::size_t y = 0; y < rows; ++y)
    for (std::size_t c = 0; c < cols; ++c) {
      const unsigned f = grid[y][c];
      const bool vert = f & (N | S);
      const bool horiz = f & (W | E);
      lines[y][c] = vert && horiz ? '+' : vert ? '|' : horiz ? '-' : ' ';
    }
  const auto& p = cp.partition();
  for (int i = 1; i <= cp.k(); ++i) lines.front()[col(i - 1)] = letter(p.block_of(up(i))).front();
  for (int j = 1; j <= cp.l(); ++j) lines.back()[col(j - 1)] = letter(p.block_of(low(j))).front();

  auto color_line = [&](const std::vector<PointElem>& colors) {
    std::string s(cols, ' ');
    for (std::size_t i = 0; i < colors.size(); ++i) {
      const std::string name = cp.gamma().name(colors[i]);
      const std::size_t start = col(static_cast<int>(i)) - std::min(col(static_cast<int>(i)), (name.size() - 1) / 2);
      s.replace(start, name.size(), name);
    }
    return s;
  };
  std::ostringstream out;
  auto emit = [&](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  // A row without points has nothing to label.
  if (cp.k() > 0) emit(color_line(cp.upper_colors()));
  for (std::size_t y = 0; y < rows; ++y)
    if ((y > 0 || cp.k() > 0) && (y + 1 < rows || cp.l() > 0)) emit(lines[y]);
  if (cp.l() > 0) emit(color_line(cp.lower_colors()));
  out << legend(cp);
  return out.str();
}

std::string svg(const ColoredPartition& cp) {
  const Layout lay = layout(cp.partition());
  const int step = static_cast<int>(std::max<std::size_t>(40, label_width(cp) * 10));
  const int pitch = 24;
  const int margin = 40;
  const auto px = [&](int x) { return margin + x * step; };
  const auto py = [&](int y) { return margin + y * pitch; };
  const int legend_top = py(lay.bottom) + 40;
  const int width = std::max(2 * margin + std::max(lay.width - 1, 0) * step, 320);
  const int height = legend_top + 18 * static_cast<int>(cp.size() + 1) + 10;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\" fill=\"none\">\n";
  for (const auto& v : lay.vertical)
    if (v.y0 != v.y1)
      out << "<line x1=\"" << px(v.x) << "\" y1=\"" << py(v.y0) << "\" x2=\"" << px(v.x) << "\" y2=\"" << py(v.y1)
          << "\"/>\n";
  for (const auto& h : lay.horizontal)
    out << "<line x1=\"" << px(h.x0) << "\" y1=\"" << py(h.y) << "\" x2=\"" << px(h.x1) << "\" y2=\"" << py(h.y)
        << "\"/>\n";
  out << "</g>\n<g font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">\n";
  const auto& p = cp.partition();
  for (int i = 1; i <= cp.k(); ++i) {
    out << "<circle cx=\"" << px(i - 1) << "\" cy=\"" << py(0) << "\" r=\"4\" fill=\"black\"/>\n";
    out << "<text x=\"" << px(i - 1) << "\" y=\"" << py(0) - 20 << "\">" << escape(cp.gamma().name(cp.upper_colors()[i - 1]))
        << "</text>\n";
    out << "<text x=\"" << px(i - 1) + 10 << "\" y=\"" << py(0) - 6 << "\" fill=\"gray\">" << letter(p.block_of(up(i)))
        << "</text>\n";
  }
  for (int j = 1; j <= cp.l(); ++j) {
    out << "<circle cx=\"" << px(j - 1) << "\" cy=\"" << py(lay.bottom) << "\" r=\"4\" fill=\"black\"/>\n";
    out << "<text x=\"" << px(j - 1) << "\" y=\"" << py(lay.bottom) + 24 << "\">"
        << escape(cp.gamma().name(cp.lower_colors()[j - 1])) << "</text>\n";
    out << "<text x=\"" << px(j - 1) + 10 << "\" y=\"" << py(lay.bottom) + 14 << "\" fill=\"gray\">"
        << letter(p.block_of(low(j))) << "</text>\n";
  }
  out << "</g>\n<g font-family=\"monospace\" font-size=\"12\">\n";
  std::istringstream lines(legend(cp));
  std::string line;
  int y = legend_top;
  while (std::getline(lines, line)) {
    out << "<text x=\"" << margin / 2 << "\" y=\"" << y << "\">" << escape(line) << "</text>\n";
    y += 18;
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace ncpart::render
