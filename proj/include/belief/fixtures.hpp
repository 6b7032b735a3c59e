#pragma once

#include "belief/ppl.hpp"

namespace belief {

// The running medical-test example: 5% prevalence, 90% sensitivity, 95%
// specificity, with data 2 positive + 1 negative.
struct DiseaseModel {
  SpacePtr states;    // {d, nd}
  SpacePtr outcomes;  // {p, n}
  Dist prior;
  Channel test;
  Multiset data;  // 2|p> + 1|n>
  Dist target;    // flrn(data) = 2/3 p + 1/3 n
};

DiseaseModel build_disease_model();

// The club-door example: rock/pop preferences observed directly (identity
// channel), management target 3/4 rock + 1/4 pop.
struct ClubModel {
  SpacePtr preferences;
  Dist prior;
  Channel door;
  Dist target;
};

ClubModel build_club_model();

struct ProgSet {
  ProgramPtr prog1;  // three successive conditions
  ProgramPtr prog2;  // random target, single condition
  ProgramPtr prog3;  // random target, nested inference
};

ProgSet build_progs();

}  // namespace belief
