#pragma once

#include <string>

namespace toxspan {

// Instance-level self-adjusting dice loss over a positive-class probability p
// and binary target y:
//
//   f  = (1-p)^alpha * p
//   DL = 1 - (2*f*y + gamma) / (f + y + gamma)
//
// alpha down-weights easy examples; gamma keeps the ratio defined when both
// f and y vanish.
struct DiceLossConfig {
  double alpha = 0.7;
  double gamma = 0.25;

  void validate() const;  // alpha >= 0, gamma > 0
};

enum class LossKind { ce, wce, dice };

struct LossSelector {
  LossKind kind = LossKind::dice;
  double positive_class_weight = 1.0;  // wce only
  DiceLossConfig dice;

  void validate() const;
};

LossKind loss_kind_from_name(const std::string& name);
std::string loss_kind_name(LossKind kind);

// All losses require p strictly inside (0,1) and internally clamp it to
// [1e-7, 1-1e-7] before evaluation; the clamp is treated as pass-through in
// the gradients.
inline constexpr double kProbEps = 1e-7;

double dice_loss(double p, int y, const DiceLossConfig& cfg);
double dice_grad(double p, int y, const DiceLossConfig& cfg);

double ce_loss(double p, int y);
double ce_grad(double p, int y);

double wce_loss(double p, int y, double positive_class_weight);
double wce_grad(double p, int y, double positive_class_weight);

double loss_value(const LossSelector& sel, double p, int y);
double loss_grad(const LossSelector& sel, double p, int y);

} // namespace toxspan
