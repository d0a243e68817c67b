#include "arscb/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace arscb {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

void write_meta(std::ofstream& out, const MetaList& meta) {
    for (const auto& [k, v] : meta) out << "# " << k << "=" << v << "\n";
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_series_csv(const std::string& path, const Series& series,
                      const MetaList& extra_meta) {
    auto out = open_out(path);
    out << "# presample_len=" << series.presample.size() << "\n";
    write_meta(out, extra_meta);
    out << "x\n";
    for (Eigen::Index i = 0; i < series.presample.size(); ++i)
        out << format_double(series.presample[i]) << "\n";
    for (Eigen::Index i = 0; i < series.body.size(); ++i)
        out << format_double(series.body[i]) << "\n";
}

SeriesFile read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);

    SeriesFile file;
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            const auto eq = body.find('=');
            if (eq != std::string::npos) {
                auto trim = [](std::string s) {
                    const auto a = s.find_first_not_of(" \t");
                    const auto b = s.find_last_not_of(" \t");
                    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
                };
                file.meta[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
            }
            continue;
        }
        try {
            size_t used = 0;
            const double v = std::stod(line, &used);
            values.push_back(v);
        } catch (const std::exception&) {
            // header row or other non-numeric line
            continue;
        }
    }
    if (values.empty()) throw std::runtime_error("no data rows in " + path);

    Eigen::Index presample_len = 0;
    if (auto it = file.meta.find("presample_len"); it != file.meta.end()) {
        presample_len = std::stoll(it->second);
        if (presample_len < 0 || presample_len > static_cast<Eigen::Index>(values.size()))
            throw std::runtime_error("invalid presample_len in " + path);
    }
    file.series.presample =
        Eigen::Map<const Eigen::VectorXd>(values.data(), presample_len);
    file.series.body = Eigen::Map<const Eigen::VectorXd>(
        values.data() + presample_len, static_cast<Eigen::Index>(values.size()) - presample_len);
    return file;
}

void write_fit_record(const std::string& path, const FittedAr& fit, double bandwidth) {
    auto out = open_out(path);
    out << "order=" << fit.order << "\n";
    out << "phi_hat=";
    for (Eigen::Index i = 0; i < fit.phi_hat.size(); ++i)
        out << (i ? "," : "") << format_double(fit.phi_hat[i]);
    out << "\n";
    out << "gamma_hat=";
    for (Eigen::Index i = 0; i < fit.gamma.gamma_hat.size(); ++i)
        out << (i ? "," : "") << format_double(fit.gamma.gamma_hat[i]);
    out << "\n";
    out << "n=" << fit.gamma.n << "\n";
    out << "bandwidth=" << format_double(bandwidth) << "\n";
}

void write_grid_csv(const std::string& path, const Eigen::VectorXd& z,
                    const Eigen::VectorXd& f, const MetaList& extra_meta) {
    if (z.size() != f.size()) throw std::invalid_argument("write_grid_csv: size mismatch");
    auto out = open_out(path);
    write_meta(out, extra_meta);
    out << "z,F\n";
    for (Eigen::Index i = 0; i < z.size(); ++i)
        out << format_double(z[i]) << "," << format_double(f[i]) << "\n";
}

void write_band_csv(const std::string& path, const Band& band,
                    const Eigen::VectorXd& grid, const MetaList& extra_meta) {
    auto out = open_out(path);
    out << "# level=" << format_double(band.level) << "\n";
    out << "# halfwidth=" << format_double(band.halfwidth) << "\n";
    write_meta(out, extra_meta);
    out << "z,lower,center,upper\n";
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const double z = grid[i];
        out << format_double(z) << "," << format_double(band.lower(z)) << ","
            << format_double(band.center(z)) << "," << format_double(band.upper(z)) << "\n";
    }
}

} // namespace arscb
