#include "cantordiff/render.hpp"

#include "cantordiff/oracle.hpp"

#include <string>

namespace cantordiff::render {

namespace {

constexpr int kPlotWidth = 1000;
constexpr int kMarginX = 20;
constexpr int kMarginY = 20;
constexpr int kRowHeight = 14;
constexpr int kRowGap = 8;

std::string milli_string(BigInt milli) {
  const bool negative = milli < 0;
  if (negative) milli = -milli;
  const BigInt whole = milli / 1000;
  const BigInt rem = milli % 1000;
  std::string f = rem.str();
  f.insert(f.begin(), 3 - f.size(), '0');
  return (negative ? "-" : "") + whole.str() + "." + f;
}

// x in [-1,1] -> pixel offset inside the plot area, printed with three
// decimals computed in exact arithmetic.
std::string px(const Rational& x) {
  const Rational pos = (x + 1) * Rational(kPlotWidth, 2) + kMarginX;
  return milli_string(floor_to_int(pos * 1000 + Rational(1, 2)));
}

}  // namespace

std::string cover_svg(const DigitSet& d, int depth) {
  const int height = kMarginY * 2 + (depth + 1) * kRowHeight +
                     depth * kRowGap;
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kPlotWidth + 2 * kMarginX + 60) + "\" height=\"" +
         std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int n = 0; n <= depth; ++n) {
    const int y = kMarginY + n * (kRowHeight + kRowGap);
    const oracle::Cover c = oracle::cover(d, n);
    svg += "<text x=\"" + std::to_string(kMarginX + kPlotWidth + 8) +
           "\" y=\"" + std::to_string(y + kRowHeight - 3) +
           "\" font-family=\"monospace\" font-size=\"11\">n=" +
           std::to_string(n) + "</text>\n";
    for (const Interval& iv : c.parts.parts()) {
      const Rational w = (iv.hi - iv.lo) * Rational(kPlotWidth, 2);
      const BigInt w_milli = floor_to_int(w * 1000 + Rational(1, 2));
      // degenerate parts still get a hairline
      const std::string width =
          (w_milli <= 0) ? std::string("0.001") : milli_string(w_milli);
      svg += "<rect x=\"" + px(iv.lo) + "\" y=\"" + std::to_string(y) +
             "\" width=\"" + width + "\" height=\"" +
             std::to_string(kRowHeight) + "\" fill=\"#30506d\"/>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

std::string cover_csv(const DigitSet& d, int depth) {
  std::string out = "depth,part,lo,hi\n";
  for (int n = 0; n <= depth; ++n) {
    const oracle::Cover c = oracle::cover(d, n);
    for (std::size_t i = 0; i < c.parts.part_count(); ++i) {
      const Interval& iv = c.parts.parts()[i];
      out += std::to_string(n) + "," + std::to_string(i) + "," +
             to_string(iv.lo) + "," + to_string(iv.hi) + "\n";
    }
  }
  return out;
}

}  // namespace cantordiff::render
