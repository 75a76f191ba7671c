#include "pog/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace pog {

namespace {

// Comma-separated doubles; whitespace around cells is tolerated, decimal
// points only (never locale-dependent).
std::vector<double> parse_row(const std::string& line, long line_number) {
    std::vector<double> values;
    size_t pos = 0;
    while (true) {
        size_t next = line.find(',', pos);
        std::string cell = line.substr(pos, next == std::string::npos ? next : next - pos);
        const size_t begin = cell.find_first_not_of(" \t\r");
        if (begin == std::string::npos) {
            std::ostringstream msg;
            msg << "line " << line_number << ": empty cell";
            throw ParseError(msg.str());
        }
        const size_t end = cell.find_last_not_of(" \t\r");
        cell = cell.substr(begin, end - begin + 1);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
        if (ec != std::errc() || ptr != cell.data() + cell.size()) {
            std::ostringstream msg;
            msg << "line " << line_number << ": cannot parse '" << cell << "' as a number";
            throw ParseError(msg.str());
        }
        values.push_back(value);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return values;
}

std::vector<std::vector<double>> read_rows(const std::string& path, bool has_header) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::vector<std::vector<double>> rows;
    std::string line;
    long line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line_number == 1 && has_header) continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> row = parse_row(line, line_number);
        if (!rows.empty() && row.size() != rows.front().size()) {
            std::ostringstream msg;
            msg << "line " << line_number << ": expected " << rows.front().size()
                << " columns, found " << row.size();
            throw ParseError(msg.str());
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError("no data rows in file: " + path);
    }
    return rows;
}

}  // namespace

Dataset load_dataset(const std::string& path, bool has_header) {
    const auto rows = read_rows(path, has_header);
    const long n = static_cast<long>(rows.size());
    const long width = static_cast<long>(rows.front().size());
    if (width < 2) {
        throw ParseError("need at least one feature column and one target column: " + path);
    }
    Dataset data;
    data.X.resize(width - 1, n);
    data.y.resize(n);
    for (long j = 0; j < n; ++j) {
        const auto& row = rows[static_cast<size_t>(j)];
        for (long i = 0; i < width - 1; ++i) {
            data.X(i, j) = row[static_cast<size_t>(i)];
        }
        data.y[j] = row[static_cast<size_t>(width - 1)];
    }
    return data;
}

Eigen::MatrixXd load_matrix(const std::string& path, bool has_header) {
    const auto rows = read_rows(path, has_header);
    const long n = static_cast<long>(rows.size());
    const long width = static_cast<long>(rows.front().size());
    Eigen::MatrixXd X(width, n);
    for (long j = 0; j < n; ++j) {
        for (long i = 0; i < width; ++i) {
            X(i, j) = rows[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
    }
    return X;
}

StandardizeResult standardize(const Eigen::Ref<const Eigen::MatrixXd>& X_train,
                              const Eigen::Ref<const Eigen::MatrixXd>& X_test) {
    const long p = X_train.rows();
    const long n = X_train.cols();
    if (n == 0) {
        throw std::invalid_argument("standardize: training set must be nonempty");
    }
    StandardizeResult out;
    out.mean.resize(p);
    out.scale.resize(p);
    for (long i = 0; i < p; ++i) {
        out.mean[i] = X_train.row(i).mean();
        const double var =
            (X_train.row(i).array() - out.mean[i]).square().sum() / static_cast<double>(n);
        const double sd = std::sqrt(var);
        if (sd > 0.0) {
            out.scale[i] = sd;
        } else {
            out.scale[i] = 1.0;
            out.mean[i] = 0.0;
            out.constant_dims.push_back(static_cast<int>(i));
            std::cerr << "standardize: feature " << i
                      << " has zero variance; passed through unscaled\n";
        }
    }
    out.train = (X_train.colwise() - out.mean).array().colwise() / out.scale.array();
    out.test = (X_test.colwise() - out.mean).array().colwise() / out.scale.array();
    return out;
}

std::vector<long> shuffled_indices(long n, unsigned long long seed) {
    std::vector<long> order(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::mt19937_64 rng(seed);
    for (long i = n - 1; i > 0; --i) {
        const long j = static_cast<long>(rng() % static_cast<unsigned long long>(i + 1));
        std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
    }
    return order;
}

}  // namespace pog
