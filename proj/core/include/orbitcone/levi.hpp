#pragma once

#include <vector>

#include "orbitcone/root_system.hpp"

namespace orbitcone {

// Sub-system generated by a subset of the simple roots. Components live in
// the parent's ambient space; `nodes[j]` is the parent index of the j-th
// simple root of the component system (Bourbaki order of the component).
struct LeviSubsystem {
  std::vector<int> selected;
  struct Component {
    std::vector<int> nodes;
    RootSystem system;
  };
  std::vector<Component> components;
  Mat projector;  // orthogonal projection onto span{alpha_i : i selected}
};

LeviSubsystem levi_subsystem(const RootSystem& rs, std::vector<int> selected);

// Orthogonal decomposition lambda = semisimple + central with the semisimple
// part in span(selected roots) and the central part pairing to zero with them.
struct ProjectedWeight {
  Weight semisimple;               // lambda restricted, as a parent weight
  std::vector<Vec> component_fund; // its fundamental coordinates per component
  Weight central;                  // nu, dominant for the parent system
};

ProjectedWeight project_weight(const RootSystem& rs, const LeviSubsystem& ls, const Weight& lambda);

Vec apply_matrix(const Mat& m, const Vec& v);

}  // namespace orbitcone
