#pragma once
#include <gmpxx.h>
#include <initializer_list>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lefschetz/errors.hpp"

namespace lefschetz {

// Dense row-major matrix over arbitrary-precision integers. Empty shapes
// (0 rows or 0 columns) are legal.
class ZMatrix {
public:
    ZMatrix() : rows_(0), cols_(0) {}
    ZMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    }
    ZMatrix(std::initializer_list<std::initializer_list<long>> init);

    static ZMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const ZMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    ZMatrix transposed() const;
    ZMatrix operator*(const ZMatrix& o) const;

    // Interchange format: {"rows": r, "cols": c, "entries": [decimal strings]}.
    nlohmann::json to_json() const;
    static ZMatrix from_json(const nlohmann::json& j);

private:
    int rows_, cols_;
    std::vector<mpz_class> data_;
};

} // namespace lefschetz
