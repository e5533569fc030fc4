#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "porank/ranking.hpp"

namespace porank {

/// A label-ranking dataset: N feature vectors of dimension d, each annotated
/// with a complete ranking of the same M labels.
struct Dataset {
    std::vector<double> features;  // N x d, row-major
    std::vector<Ranking> rankings;
    std::vector<std::string> label_names;
    std::vector<std::string> feature_names;

    int n() const { return static_cast<int>(rankings.size()); }
    int d() const { return static_cast<int>(feature_names.size()); }
    int m() const { return static_cast<int>(label_names.size()); }

    const double* row(int i) const { return features.data() + static_cast<std::size_t>(i) * d(); }

    /// Throws std::invalid_argument on any invariant violation:
    /// N >= 1, d >= 1, complete rankings over one label set, finite features.
    void validate() const;

    bool operator==(const Dataset& other) const;
};

/// Raised by read_dataset_csv with the 1-based file line (and column where
/// meaningful) of the first violation.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column = -1);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Reads the CSV dataset format: a header of feature columns named "f:<name>"
/// followed by a final "ranking" column; each data row holds numeric features
/// and a complete '>'-separated ranking of label names. The label set is
/// fixed by the first data row (indices assigned in lexicographic name order).
Dataset read_dataset_csv(const std::string& path);

/// Inverse of read_dataset_csv. Feature values are written with shortest
/// round-trip formatting, so reading the file back yields an equal Dataset.
void write_dataset_csv(const Dataset& dataset, const std::string& path);

} // namespace porank
