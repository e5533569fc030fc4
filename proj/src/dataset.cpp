#include "porank/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace porank {

void Dataset::validate() const {
    if (n() < 1) throw std::invalid_argument("Dataset: needs at least one instance");
    if (d() < 1) throw std::invalid_argument("Dataset: needs at least one feature");
    if (m() < 1) throw std::invalid_argument("Dataset: needs at least one label");
    if (features.size() != static_cast<std::size_t>(n()) * d()) {
        throw std::invalid_argument("Dataset: feature matrix shape mismatch");
    }
    for (const Ranking& r : rankings) {
        if (r.size() != m()) throw std::invalid_argument("Dataset: ranking dimension mismatch");
    }
    for (const double x : features) {
        if (!std::isfinite(x)) throw std::invalid_argument("Dataset: non-finite feature value");
    }
}

bool Dataset::operator==(const Dataset& other) const {
    return features == other.features && rankings == other.rankings &&
           label_names == other.label_names && feature_names == other.feature_names;
}

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error(std::move(message)), line_(line), column_(column) {}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) fields.push_back(field);
    if (!line.empty() && line.back() == sep) fields.emplace_back();
    return fields;
}

ParseError make_error(const std::string& what, int line, int column = -1) {
    std::ostringstream msg;
    msg << what << " (line " << line;
    if (column >= 0) msg << ", column " << column + 1;
    msg << ")";
    return ParseError(msg.str(), line, column);
}

double parse_feature(const std::string& cell, int line, int column) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc() || result.ptr != end || !std::isfinite(value)) {
        throw make_error("non-numeric feature value '" + cell + "'", line, column);
    }
    return value;
}

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

} // namespace

Dataset read_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw make_error("empty file, missing header", 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const std::vector<std::string> header = split(line, ',');
    if (header.size() < 2 || header.back() != "ranking") {
        throw make_error("malformed header: expected feature columns then a final 'ranking' column", 1);
    }
    Dataset dataset;
    for (std::size_t c = 0; c + 1 < header.size(); ++c) {
        if (header[c].rfind("f:", 0) != 0 || header[c].size() == 2) {
            throw make_error("malformed header: feature column '" + header[c] +
                                 "' must be named 'f:<name>'",
                             1, static_cast<int>(c));
        }
        dataset.feature_names.push_back(header[c].substr(2));
    }
    const int d = dataset.d();
    const int ranking_column = d;

    std::map<std::string, int> label_index;
    int line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const std::vector<std::string> cells = split(line, ',');
        if (static_cast<int>(cells.size()) != d + 1) {
            throw make_error("expected " + std::to_string(d + 1) + " columns, found " +
                                 std::to_string(cells.size()),
                             line_number);
        }
        for (int c = 0; c < d; ++c) {
            dataset.features.push_back(parse_feature(cells[c], line_number, c));
        }

        const std::vector<std::string> names = split(cells[ranking_column], '>');
        if (label_index.empty()) {
            // First data row fixes the label set; indices follow name order.
            std::vector<std::string> sorted = names;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
                if (sorted[k] == sorted[k + 1]) {
                    throw make_error("duplicate label '" + sorted[k] + "' in ranking",
                                     line_number, ranking_column);
                }
            }
            for (const std::string& name : sorted) {
                if (name.empty()) {
                    throw make_error("empty label name in ranking", line_number, ranking_column);
                }
                label_index[name] = static_cast<int>(dataset.label_names.size());
                dataset.label_names.push_back(name);
            }
        }
        const int m = dataset.m();
        std::vector<int> order;
        std::vector<char> seen(m, 0);
        for (const std::string& name : names) {
            const auto it = label_index.find(name);
            if (it == label_index.end()) {
                throw make_error("unknown label '" + name + "' in ranking", line_number,
                                 ranking_column);
            }
            if (seen[it->second]) {
                throw make_error("duplicate label '" + name + "' in ranking", line_number,
                                 ranking_column);
            }
            seen[it->second] = 1;
            order.push_back(it->second);
        }
        if (static_cast<int>(order.size()) != m) {
            throw make_error("incomplete ranking: " + std::to_string(order.size()) + " of " +
                                 std::to_string(m) + " labels",
                             line_number, ranking_column);
        }
        dataset.rankings.emplace_back(std::move(order));
    }
    if (dataset.rankings.empty()) throw make_error("no data rows", line_number);
    dataset.validate();
    return dataset;
}

void write_dataset_csv(const Dataset& dataset, const std::string& path) {
    dataset.validate();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write dataset file: " + path);
    for (const std::string& name : dataset.feature_names) out << "f:" << name << ",";
    out << "ranking\n";
    for (int i = 0; i < dataset.n(); ++i) {
        for (int c = 0; c < dataset.d(); ++c) out << format_double(dataset.row(i)[c]) << ",";
        const Ranking& r = dataset.rankings[i];
        for (int pos = 0; pos < r.size(); ++pos) {
            if (pos > 0) out << ">";
            out << dataset.label_names[r.label_at(pos)];
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("failed writing dataset file: " + path);
}

} // namespace porank
