#pragma once

#include <string>
#include <vector>

namespace cwilf::reference {

// Known equivalence classes for short patterns, used by the verification
// suite. strong[i] lists one strong class; superstrong refines it.
struct ClassificationFixture {
    int m = 0;
    std::vector<std::vector<std::string>> strong;
    std::vector<std::vector<std::string>> superstrong;
};

// m in {3, 4, 5}.
const ClassificationFixture& classification_fixture(int m);

}  // namespace cwilf::reference
