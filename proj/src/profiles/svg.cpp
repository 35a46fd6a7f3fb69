#include "momark/profiles.hpp"

#include "momark/io.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <cstdio>

namespace momark {

namespace {

const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape(const std::string& s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

double PlotFrame::x_pixel(double alpha) const
{
    const double a = std::clamp(alpha, alpha_lo, alpha_hi);
    const double t = (std::log10(a) - std::log10(alpha_lo)) / (std::log10(alpha_hi) - std::log10(alpha_lo));
    return left + t * (width - left - right);
}

double PlotFrame::y_pixel(double fraction) const
{
    const double f = std::clamp(fraction, 0.0, 1.0);
    return height - bottom - f * (height - top - bottom);
}

std::string format_svg(const std::vector<DataProfile>& profiles, const std::string& title, const PlotFrame& frame)
{
    if (!(frame.alpha_lo > 0.0 && frame.alpha_hi > frame.alpha_lo))
        throw ConfigError("svg: invalid alpha range");
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(frame.width) + "\" height=\""
         + num(frame.height) + "\" viewBox=\"0 0 " + num(frame.width) + " " + num(frame.height) + "\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + num(frame.width) + "\" height=\"" + num(frame.height)
         + "\" fill=\"white\"/>\n";
    s += "<text x=\"" + num(frame.width / 2) + "\" y=\"" + num(frame.top / 2 + 5)
         + "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" + escape(title) + "</text>\n";

    const double x0 = frame.x_pixel(frame.alpha_lo);
    const double x1 = frame.x_pixel(frame.alpha_hi);
    const double y0 = frame.y_pixel(0.0);
    const double y1 = frame.y_pixel(1.0);

    s += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y0) + "\"/>\n";
    s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(y1) + "\"/>\n";
    s += "</g>\n";

    s += "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n";
    const int e_lo = static_cast<int>(std::ceil(std::log10(frame.alpha_lo) - 1e-12));
    const int e_hi = static_cast<int>(std::floor(std::log10(frame.alpha_hi) + 1e-12));
    for (int e = e_lo; e <= e_hi; ++e) {
        const double x = frame.x_pixel(std::pow(10.0, e));
        s += "<line x1=\"" + num(x) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x) + "\" y2=\"" + num(y0 + 5)
             + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + num(x) + "\" y=\"" + num(y0 + 18) + "\" text-anchor=\"middle\">1e" + std::to_string(e)
             + "</text>\n";
    }
    for (int k = 0; k <= 4; ++k) {
        const double f = k / 4.0;
        const double y = frame.y_pixel(f);
        s += "<line x1=\"" + num(x0 - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(y)
             + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + num(x0 - 8) + "\" y=\"" + num(y + 4) + "\" text-anchor=\"end\">" + num(f)
             + "</text>\n";
    }
    s += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(frame.height - 12)
         + "\" text-anchor=\"middle\">alpha (evaluations / n)</text>\n";
    s += "<text x=\"15\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
         + num((y0 + y1) / 2) + ")\">fraction of targets</text>\n";
    s += "</g>\n";

    for (std::size_t i = 0; i < profiles.size(); ++i) {
        const DataProfile& p = profiles[i];
        if (p.alphas.size() != p.fractions.size())
            throw ValueError("svg: profile " + p.solver + " has mismatched lengths");
        const std::string colour = palette[i % std::size(palette)];
        std::string pts;
        double prev_y = frame.y_pixel(0.0);
        bool first = true;
        for (std::size_t j = 0; j < p.alphas.size(); ++j) {
            if (p.alphas[j] < frame.alpha_lo || p.alphas[j] > frame.alpha_hi)
                continue;
            const double x = frame.x_pixel(p.alphas[j]);
            const double y = frame.y_pixel(p.fractions[j]);
            if (!first)
                pts += num(x) + "," + num(prev_y) + " ";
            pts += num(x) + "," + num(y) + " ";
            prev_y = y;
            first = false;
        }
        if (!pts.empty())
            pts.pop_back();
        s += "<polyline class=\"profile\" data-solver=\"" + escape(p.solver) + "\" fill=\"none\" stroke=\"" + colour
             + "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";

        if (p.max_alpha_marker > 0.0 && !p.alphas.empty()) {
            double f = 0.0;
            for (std::size_t j = 0; j < p.alphas.size() && p.alphas[j] <= p.max_alpha_marker; ++j)
                f = p.fractions[j];
            const double mx = frame.x_pixel(p.max_alpha_marker);
            const double my = frame.y_pixel(f);
            s += "<g class=\"budget-marker\" data-solver=\"" + escape(p.solver) + "\" transform=\"translate("
                 + num(mx) + "," + num(my) + ")\" stroke=\"" + colour + "\" stroke-width=\"2\">"
                 + "<line x1=\"-5\" y1=\"-5\" x2=\"5\" y2=\"5\"/><line x1=\"-5\" y1=\"5\" x2=\"5\" y2=\"-5\"/></g>\n";
        }
    }

    s += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"11\">\n";
    const double lx = frame.width - frame.right + 15;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        const double ly = frame.top + 15 + 18.0 * static_cast<double>(i);
        const std::string colour = palette[i % std::size(palette)];
        s += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 20) + "\" y2=\"" + num(ly)
             + "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
        s += "<text x=\"" + num(lx + 25) + "\" y=\"" + num(ly + 4) + "\">" + escape(profiles[i].solver)
             + "</text>\n";
    }
    s += "</g>\n</svg>\n";
    return s;
}

void emit_svg(const std::vector<DataProfile>& profiles, const std::string& title, const std::filesystem::path& path,
              const PlotFrame& frame)
{
    io::write_file_atomic(path, format_svg(profiles, title, frame));
}

} // namespace momark
