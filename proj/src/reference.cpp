#include "cwilf/reference.hpp"

#include <stdexcept>

namespace cwilf::reference {

namespace {

ClassificationFixture make_m3() {
    ClassificationFixture f;
    f.m = 3;
    f.strong = {
        {"123", "321"},
        {"132", "213", "231", "312"},
    };
    f.superstrong = f.strong;
    return f;
}

ClassificationFixture make_m4() {
    ClassificationFixture f;
    f.m = 4;
    f.strong = {
        {"1234", "4321"},
        {"1243", "2134", "3421", "4312"},
        {"1324", "4231"},
        {"1342", "1432", "2341", "2431", "3124", "3214", "4123", "4213"},
        {"1423", "2314", "3241", "4132"},
        {"2143", "3412"},
        {"2413", "3142"},
    };
    f.superstrong = {
        {"1234", "4321"},
        {"1243", "2134", "3421", "4312"},
        {"1324", "4231"},
        {"1342", "1432", "2341", "2431", "3124", "3214", "4123", "4213"},
        {"1423", "4132"},
        {"2314", "3241"},
        {"2143", "3412"},
        {"2413", "3142"},
    };
    return f;
}

ClassificationFixture make_m5() {
    ClassificationFixture f;
    f.m = 5;
    // Split strong classes: each pair of rows forms one strong class.
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
        split = {
            {{"14253", "52413"}, {"31425", "35241"}},
            {{"15243", "51423"}, {"32415", "34251"}},
            {{"24513", "42153"}, {"31542", "35124"}},
            {{"13254", "53412"}, {"21435", "45231"}},
            {{"21543", "45123"}, {"32154", "34512"}},
            {{"13524", "53142"}, {"24135", "42531"}},
            {{"25413", "41253"}, {"31452", "35214"}},
            {{"23514", "43152"}, {"25134", "41532"}},
            {{"14523", "52143"}, {"32541", "34125"}},
            {{"12534", "54132"}, {"23145", "43521"}},
            {{"15324", "51342"}, {"24315", "42351"}},
            {{"21453", "45213"}, {"31254", "35412"}},
            {{"15423", "51243"}, {"32451", "34215"}},
            {{"15234", "51432"}, {"23415", "43251"}},
        };
    std::vector<std::vector<std::string>> unsplit = {
        {"12345", "54321"},
        {"25314", "41352"},
        {"14325", "52341"},
        {"13452", "53214", "25431", "41235", "13542", "53124", "24531",
         "42135", "14352", "52314", "25341", "41325", "14532", "52134",
         "23541", "43125", "15342", "51324", "24351", "42315", "15432",
         "51234", "23451", "43215"},
        {"24153", "42513", "35142", "31524", "25143", "41523", "34152",
         "32514"},
        {"13425", "53241", "52431", "14235"},
        {"21354", "45312"},
        {"21534", "45132", "43512", "23154"},
        {"12453", "54213", "35421", "31245", "12543", "54123", "34521",
         "32145"},
        {"12435", "54231", "53421", "13245"},
        {"12354", "54312", "45321", "21345"},
    };
    for (const auto& [left, right] : split) {
        std::vector<std::string> whole(left);
        whole.insert(whole.end(), right.begin(), right.end());
        f.strong.push_back(whole);
        f.superstrong.push_back(left);
        f.superstrong.push_back(right);
    }
    for (const auto& c : unsplit) {
        f.strong.push_back(c);
        f.superstrong.push_back(c);
    }
    return f;
}

}  // namespace

const ClassificationFixture& classification_fixture(int m) {
    static const ClassificationFixture m3 = make_m3();
    static const ClassificationFixture m4 = make_m4();
    static const ClassificationFixture m5 = make_m5();
    switch (m) {
        case 3: return m3;
        case 4: return m4;
        case 5: return m5;
        default:
            throw std::out_of_range("no classification fixture for m=" +
                                    std::to_string(m));
    }
}

}  // namespace cwilf::reference
