#pragma once

#include <vector>

#include "rotns/field.hpp"

namespace rotns {

/// Uniform nodes t_i = i T / M on [0, T].
struct TimeGrid {
  double T = 1.0;
  int M = 64;

  void validate() const;
  double step() const noexcept { return T / M; }
  double node(int i) const noexcept { return T * i / M; }
  std::vector<double> nodes() const;
};

/// Time-indexed sequence of fields on one grid with strictly increasing nodes.
class FieldSeries {
 public:
  FieldSeries() = default;
  FieldSeries(std::vector<double> times, std::vector<SpectralField> fields);

  /// Appends a node; t must exceed the last node and the grid must match.
  void push_back(double t, SpectralField field);

  std::size_t size() const noexcept { return fields_.size(); }
  bool empty() const noexcept { return fields_.empty(); }
  const std::vector<double>& times() const noexcept { return times_; }
  const SpectralField& operator[](std::size_t i) const { return fields_[i]; }
  SpectralField& operator[](std::size_t i) { return fields_[i]; }
  const std::vector<SpectralField>& fields() const noexcept { return fields_; }
  const Grid& grid() const;
  double horizon() const { return times_.back(); }

  /// Node-wise scaling and differences; both series must share nodes.
  FieldSeries scaled(double a) const;
  FieldSeries& operator+=(const FieldSeries& other);
  FieldSeries& operator-=(const FieldSeries& other);
  friend FieldSeries operator-(FieldSeries a, const FieldSeries& b) { return a -= b; }
  friend FieldSeries operator+(FieldSeries a, const FieldSeries& b) { return a += b; }

  /// Series restricted to the nodes with t <= horizon.
  FieldSeries truncated(double horizon) const;

 private:
  void check_same_nodes(const FieldSeries& other) const;

  std::vector<double> times_;
  std::vector<SpectralField> fields_;
};

/// Series holding `field` unchanged at every node.
FieldSeries constant_series(const SpectralField& field, const std::vector<double>& times);

}  // namespace rotns
