#include "blgv/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>

#include "blgv/errors.hpp"

namespace blgv {

namespace {

void put_u32(std::ofstream& out, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ofstream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::ifstream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

double get_f64(std::ifstream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

} // namespace

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path), width_(header.size()) {
    if (!out_) throw Error("cannot open CSV for writing: " + path);
    for (std::size_t i = 0; i < header.size(); ++i)
        out_ << header[i] << (i + 1 < header.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw Error("CSV row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i)
        out_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
}

std::string CsvWriter::num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void save_snapshot(const std::string& path, const Field& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open snapshot for writing: " + path);
    out.write("BLGV", 4);
    put_u32(out, 1u);
    put_u32(out, static_cast<std::uint32_t>(f.grid->n_x()));
    put_u32(out, static_cast<std::uint32_t>(f.grid->n_y()));
    put_f64(out, f.grid->L_x());
    put_f64(out, f.grid->y_max());
    put_f64(out, f.t);
    for (double v : f.v) put_f64(out, v);
}

Field load_snapshot(const std::string& path, double stretch) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open snapshot: " + path);
    char magic[4];
    in.read(magic, 4);
    if (std::memcmp(magic, "BLGV", 4) != 0) throw Error("snapshot: bad magic in " + path);
    const std::uint32_t version = get_u32(in);
    if (version != 1u) throw Error("snapshot: unsupported version");
    const int n_x = static_cast<int>(get_u32(in));
    const int n_y = static_cast<int>(get_u32(in));
    const double L_x = get_f64(in);
    const double y_max = get_f64(in);
    const double t = get_f64(in);
    auto g = (stretch == 1.0) ? Grid::uniform(L_x, n_x, y_max, n_y)
                              : Grid::stretched(L_x, n_x, y_max, n_y, stretch);
    std::vector<double> vals(static_cast<std::size_t>(n_x) * n_y);
    for (double& v : vals) v = get_f64(in);
    if (!in) throw Error("snapshot: truncated file " + path);
    return Field::from_values(g, std::move(vals), t);
}

void write_report(const std::string& path,
                  const std::vector<std::pair<std::string, std::string>>& entries) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open report for writing: " + path);
    for (const auto& [k, v] : entries) out << k << "=" << v << "\n";
}

PlotEmission emit_plots(const std::string& report_dir) {
    namespace fs = std::filesystem;
    PlotEmission res;

    struct Spec {
        const char* csv;
        const char* script;
        const char* body;
    };
    const Spec specs[] = {
        {"norms.csv", "norms.gp",
         "set datafile separator ','\n"
         "set key autotitle columnhead outside\n"
         "set logscale y\n"
         "set xlabel 't'\nset ylabel 'norm value'\n"
         "plot 'norms.csv' using 1:3 with points pt 7 ps 0.4\n"},
        {"mu.csv", "mu.gp",
         "set datafile separator ','\n"
         "set xlabel 't'\n"
         "plot 'mu.csv' using 1:2 with lines title 'mu', \\\n"
         "     'mu.csv' using 1:4 with lines title 'radius'\n"},
        {"apriori.csv", "apriori.gp",
         "set datafile separator ','\n"
         "set xlabel 't'\nset ylabel 'lhs/rhs'\n"
         "plot 'apriori.csv' using 1:4 with linespoints title 'ratio'\n"},
        {"radius.csv", "radius.gp",
         "set datafile separator ','\n"
         "set xlabel 't'\nset ylabel 'analyticity radius'\n"
         "plot 'radius.csv' using 1:2 with lines title 'predicted', \\\n"
         "     'radius.csv' using 1:3 with points title 'measured'\n"},
        {"spectrum.csv", "spectrum.gp",
         "set datafile separator ','\n"
         "set xlabel '|xi|'\nset ylabel 'amplitude'\nset logscale y\n"
         "plot 'spectrum.csv' using 2:3 with points pt 7 ps 0.4\n"},
        {"uniqueness.csv", "uniqueness.gp",
         "set datafile separator ','\n"
         "set xlabel 't'\nset logscale y\n"
         "plot 'uniqueness.csv' using 1:2 with lines title 'diff u', \\\n"
         "     'uniqueness.csv' using 1:3 with lines title 'diff theta'\n"},
        {"cauchy.csv", "cauchy.gp",
         "set datafile separator ','\n"
         "set xlabel 'pair'\nset logscale y\n"
         "plot 'cauchy.csv' using 0:3 with linespoints title 'L2H1 difference'\n"},
    };

    bool any_csv = false;
    for (const auto& s : specs) {
        const fs::path csv = fs::path(report_dir) / s.csv;
        if (!fs::exists(csv)) {
            res.missing.push_back(s.csv);
            continue;
        }
        any_csv = true;
        const fs::path script = fs::path(report_dir) / s.script;
        std::ofstream out(script);
        out << "# gnuplot script, run from this directory\n" << s.body;
        res.scripts.push_back(s.script);
    }
    if (!any_csv) res.scripts.clear();
    return res;
}

} // namespace blgv
