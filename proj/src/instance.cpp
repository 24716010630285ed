#include "firecut/instance.hpp"

#include <algorithm>

#include "firecut/errors.hpp"
#include "firecut/io.hpp"

namespace firecut {
namespace {
void sort_unique(std::vector<Vertex>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}
}  // namespace

void Instance::normalize() {
  sort_unique(removed);
  sort_unique(ignitions);
}

void Instance::validate() const {
  if (!graph) throw SpecError("instance: missing graph");
  for (const Vertex& v : removed)
    if (!graph->contains(v)) throw SpecError("instance: removed vertex " + to_string(v) + " not in graph");
  for (const Vertex& v : ignitions) {
    if (!graph->contains(v)) throw SpecError("instance: ignition " + to_string(v) + " not in graph");
    if (std::binary_search(removed.begin(), removed.end(), v))
      throw SpecError("instance: ignition " + to_string(v) + " is also removed");
  }
  const std::size_t n = instance_size(*this);
  if (ignitions.size() > n || removed.size() > n || budget > n)
    throw SpecError("instance: ignition count, removed count and budget must not exceed the "
                    "instance size " + std::to_string(n));
}

std::size_t instance_size(const Instance& instance) {
  return instance_to_json(instance).dump().size();
}

}  // namespace firecut
