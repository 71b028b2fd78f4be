#include "qrabi/cli/plot.hpp"

#include "qrabi/cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace qrabi::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string label(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Series {
    std::vector<double> y;
    std::string color;
    std::string dash;  // empty for solid
};

struct Frame {
    double x0, x1, y0, y1;

    double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
    double py(double y) const { return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom); }
};

std::string header(const std::string& title) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
                     num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">" + escape(title) + "</text>\n";
    return s;
}

std::string axes(const Frame& f, const std::string& xlabel, const std::string& ylabel) {
    const double left = kLeft, right = kWidth - kRight, top = kTop, bottom = kHeight - kBottom;
    std::string s = "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(right - left) +
                    "\" height=\"" + num(bottom - top) + "\" fill=\"none\" stroke=\"black\"/>\n";
    auto text = [](double x, double y, const std::string& anchor, const std::string& t) {
        return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(t) + "</text>\n";
    };
    for (int i = 0; i <= 4; ++i) {
        const double xv = f.x0 + (f.x1 - f.x0) * i / 4.0;
        const double yv = f.y0 + (f.y1 - f.y0) * i / 4.0;
        s += text(f.px(xv), bottom + 16, "middle", label(xv));
        s += text(left - 6, f.py(yv) + 4, "end", label(yv));
    }
    s += text((left + right) / 2, kHeight - 12, "middle", xlabel);
    s += "<text x=\"16\" y=\"" + num((top + bottom) / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\" transform=\"rotate(-90 16 " + num((top + bottom) / 2) + ")\">" + escape(ylabel) +
         "</text>\n";
    return s;
}

std::string line_chart(const std::vector<double>& x, const std::vector<Series>& series, const std::string& title,
                       const std::string& xlabel, const std::string& ylabel) {
    double y_lo = INFINITY, y_hi = -INFINITY;
    for (const auto& s : series)
        for (double v : s.y) {
            y_lo = std::min(y_lo, v);
            y_hi = std::max(y_hi, v);
        }
    if (!(y_hi > y_lo)) {
        y_lo -= 0.5;
        y_hi += 0.5;
    }
    const double pad = 0.03 * (y_hi - y_lo);
    double x_lo = x.front(), x_hi = x.back();
    if (!(x_hi > x_lo)) {
        x_lo -= 0.5;
        x_hi += 0.5;
    }
    const Frame f{x_lo, x_hi, y_lo - pad, y_hi + pad};

    std::string svg = header(title) + axes(f, xlabel, ylabel);
    for (const auto& s : series) {
        svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"";
        if (!s.dash.empty()) svg += " stroke-dasharray=\"" + s.dash + "\"";
        svg += " points=\"";
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) svg += ' ';
            svg += num(f.px(x[i])) + "," + num(f.py(s.y[i]));
        }
        svg += "\"/>\n";
    }
    return svg + "</svg>\n";
}

// Diverging map: blue (negative) → white (0) → red (positive).
std::string diverging(double t) {
    t = std::clamp(t, -1.0, 1.0);
    int r, g, b;
    if (t >= 0) {
        r = 255;
        g = b = static_cast<int>(std::lround(255.0 * (1.0 - t)));
    } else {
        b = 255;
        r = g = static_cast<int>(std::lround(255.0 * (1.0 + t)));
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

std::string extension(const std::filesystem::path& stem, const std::string& ext) {
    return stem.string() + ext;
}

}  // namespace

std::string spectrum_svg(const SpectrumSweep& sweep, const std::string& title) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    std::vector<Series> series;
    for (int k = 0; k < sweep.k_levels(); ++k) {
        Series s;
        s.color = palette[k % 6];
        for (Eigen::Index i = 0; i < sweep.levels.rows(); ++i) s.y.push_back(sweep.levels(i, k));
        series.push_back(std::move(s));
    }
    return line_chart(sweep.g_grid, series, title, "g / omega_c", "E / omega_c");
}

std::string entropy_svg(const std::vector<EntropyPoint>& table, const std::string& title) {
    std::vector<double> x;
    Series qrm{{}, "#2ca02c", ""};
    Series qrma{{}, "#d62728", "6,4"};
    for (const auto& pt : table) {
        x.push_back(pt.g);
        qrm.y.push_back(pt.s_qrm);
        qrma.y.push_back(pt.s_qrma);
    }
    return line_chart(x, {qrm, qrma}, title + " (green: QRM, red dashed: QRMA)", "g / omega_c", "S (bits)");
}

std::string wigner_svg(const WignerGrid& w, const std::string& title) {
    const auto& g = w.grid;
    const Frame f{g.q_min, g.q_max, g.p_min, g.p_max};
    const double scale = std::max(w.values.cwiseAbs().maxCoeff(), 1e-300);

    std::string svg = header(title + " (color scale +/-" + label(scale) + ")");
    const double cw = (kWidth - kLeft - kRight) / g.n_q;
    const double ch = (kHeight - kTop - kBottom) / g.n_p;
    svg += "<g shape-rendering=\"crispEdges\">\n";
    for (int j = 0; j < g.n_p; ++j) {
        // p increases upward
        const double y = kTop + (g.n_p - 1 - j) * ch;
        for (int i = 0; i < g.n_q; ++i) {
            svg += "<rect x=\"" + num(kLeft + i * cw) + "\" y=\"" + num(y) + "\" width=\"" + num(cw + 0.05) +
                   "\" height=\"" + num(ch + 0.05) + "\" fill=\"" + diverging(w.at(i, j) / scale) + "\"/>\n";
        }
    }
    svg += "</g>\n";
    svg += axes(f, "q", "p");
    return svg + "</svg>\n";
}

std::string wigner_gnuplot_data(const WignerGrid& w) {
    const auto& g = w.grid;
    std::string out = "# q p w\n";
    for (int j = 0; j < g.n_p; ++j) {
        for (int i = 0; i < g.n_q; ++i) {
            out += format_number(g.q(i)) + ' ' + format_number(g.p(j)) + ' ' + format_number(w.at(i, j)) + '\n';
        }
        out += '\n';
    }
    return out;
}

std::string wigner_gnuplot_script(const std::string& data_name, const std::string& title) {
    std::string s;
    s += "# gnuplot script: 3D surface of the Wigner function\n";
    s += "set title \"" + title + "\"\n";
    s += "set xlabel \"q\"\nset ylabel \"p\"\nset zlabel \"W(q,p)\"\n";
    s += "set pm3d depthorder\nset hidden3d\nset view 60,30\n";
    s += "set palette defined (-1 \"blue\", 0 \"white\", 1 \"red\")\n";
    s += "splot \"" + data_name + "\" using 1:2:3 with pm3d notitle\n";
    s += "pause mouse close\n";
    return s;
}

std::vector<std::filesystem::path> emit_plot(const SpectrumSweep& sweep, Format f,
                                             const std::filesystem::path& stem, const std::string& title) {
    if (f != Format::svg) throw UnsupportedFormat("spectrum plots support svg only, not " + to_string(f));
    const std::filesystem::path p = extension(stem, ".svg");
    write_text(p, spectrum_svg(sweep, title));
    return {p};
}

std::vector<std::filesystem::path> emit_plot(const std::vector<EntropyPoint>& table, Format f,
                                             const std::filesystem::path& stem, const std::string& title) {
    if (f != Format::svg) throw UnsupportedFormat("entropy plots support svg only, not " + to_string(f));
    const std::filesystem::path p = extension(stem, ".svg");
    write_text(p, entropy_svg(table, title));
    return {p};
}

std::vector<std::filesystem::path> emit_plot(const WignerGrid& w, Format f, const std::filesystem::path& stem,
                                             const std::string& title) {
    if (f == Format::svg) {
        const std::filesystem::path p = extension(stem, ".svg");
        write_text(p, wigner_svg(w, title));
        return {p};
    }
    if (f == Format::gnuplot) {
        const std::filesystem::path data = extension(stem, ".dat");
        const std::filesystem::path script = extension(stem, ".gp");
        write_text(data, wigner_gnuplot_data(w));
        write_text(script, wigner_gnuplot_script(data.filename().string(), title));
        return {data, script};
    }
    throw UnsupportedFormat("Wigner plots support svg and gnuplot, not " + to_string(f));
}

}  // namespace qrabi::cli
