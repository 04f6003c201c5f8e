#include "catalogue_data.hpp"

namespace hfree::data {

const std::vector<RawEntry>& raw_catalogue()
{
    static const std::vector<RawEntry> entries = {
        {"H1", R"(D__)", "open editing case"},
        {"H2", R"(Dc_)", "open editing case"},
        {"H3", R"(D_o)", "open editing case"},
        {"H4", R"(DHC)", "open editing case"},
        {"H5", R"(Ds_)", "open editing case"},
        {"H6", R"(Dgo)", "open editing case"},
        {"H7", R"(DXC)", "open editing case"},
        {"H8", R"(Dt_)", "open editing case"},
        {"H9", R"(Dgs)", "open editing case"},
        {"A1", R"(D`_)", "two-connected hard family A"},
        {"A2", R"(EhJ?)", "two-connected hard family A"},
        {"A3", R"(EhFG)", "two-connected hard family A"},
        {"A4", R"(GxkL[C)", "two-connected hard family A"},
        {"A5", R"(HnFWMl@)", "two-connected hard family A"},
        {"A6", R"(EgFG)", "two-connected hard family A"},
        {"A7", R"(Eb@W)", "two-connected hard family A"},
        {"A8", R"(EmAW)", "two-connected hard family A"},
        {"A9", R"(FWkDW)", "two-connected hard family A"},
        {"B1", R"(EDD?)", "two-connected family B"},
        {"B2", R"(FWMgG)", "two-connected family B"},
        {"B3", R"(GRC}gK)", "two-connected family B"},
        {"D1", R"(EFCG)", "deletion-only open case"},
        {"D2", R"(Ese?)", "deletion-only open case"},
        {"S1", R"(D]K)", "churn residue S"},
        {"S2", R"(Eh^g)", "churn residue S"},
        {"S3", R"(Eg\g)", "churn residue S"},
        {"S4", R"(EDC?)", "churn residue S"},
        {"S5", R"(EiMG)", "churn residue S"},
        {"S6", R"(EDK?)", "churn residue S"},
        {"S7", R"(FFcGO)", "churn residue S"},
        {"S8", R"(FhH^G)", "churn residue S"},
        {"S9", R"(FxEkG)", "churn residue S"},
        {"S10", R"(FxI[G)", "churn residue S"},
        {"S11", R"(FiCAw)", "churn residue S"},
        {"S12", R"(GhH~IC)", "churn residue S"},
        {"S13", R"(GXgDWC)", "churn residue S"},
        {"S14", R"(GI]EYS)", "churn residue S"},
        {"S15", R"(GnCMiC)", "churn residue S"},
        {"S16", R"(GfBWEk)", "churn residue S"},
        {"S17", R"(GxmLTS)", "churn residue S"},
        {"S18", R"(GnCUYC)", "churn residue S"},
        {"S19", R"(GokKS?)", "churn residue S"},
        {"S20", R"(GFaN?c)", "churn residue S"},
        {"S21", R"(Gi[GM[)", "churn residue S"},
        {"S22", R"(G`aa[k)", "churn residue S"},
        {"S23", R"(HvCS{EA)", "churn residue S"},
        {"S24", R"(HFcGS~x)", "churn residue S"},
        {"S25", R"(HbCQwFr)", "churn residue S"},
        {"S26", R"(HXCP}c`)", "churn residue S"},
        {"S27", R"(HXCXec`)", "churn residue S"},
        {"S28", R"(Ii{GU\@OO)", "churn residue S"},
        {"S29", R"(JvCS{EAccc_)", "churn residue S"},
        {"S30", R"(I~~zB?KB?)", "churn residue S"},
        {"S31", R"(IjDWMlTTW)", "churn residue S"},
        {"S32", R"(J~~~~{W@cA?)", "churn residue S"},
        {"S33", R"(I|}L[SaGg)", "churn residue S"},
        {"S34", R"(JnVyMlDCOa_)", "churn residue S"},
        {"S35", R"(KzlYqpgY@_E@)", "churn residue S"},
        {"S36", R"(I~~yIKwM?)", "churn residue S"},
        {"P3", R"(Bg)", "basic small graph"},
        {"P4", R"(CL)", "basic small graph"},
        {"claw", R"(CF)", "basic small graph"},
        {"paw", R"(C{)", "basic small graph"},
        {"diamond", R"(C|)", "basic small graph"},
        {"C4", R"(Cl)", "basic small graph"},
        {"2K2", R"(CK)", "basic small graph"},
        {"S35T", R"(IzlYqpgY?)", "three-connected image of S35"},
    };
    return entries;
}

const std::vector<RawGadget>& raw_gadgets()
{
    static const std::vector<RawGadget> rows = {
        {"co-A1", "SComponent", "delete", R"(D}k)", {{1, 0}, {2, 4}, {4, 3}}},
        {"co-A1", "BasicUnit", "delete", R"(D}k)", {{1, 0}, {2, 4}}},
        {"co-A1", "Enforcer", "delete", R"(D^k)", {{2, 3}}},
        {"co-A1", "Enforcer", "complete", R"(DUk)", {{1, 2}}},
        {"co-A2", "SComponent", "delete", R"(EjVg)", {{3, 1}, {1, 0}, {4, 5}}},
        {"co-A2", "BasicUnit", "delete", R"(EjVg)", {{3, 1}, {4, 5}}},
        {"co-A2", "Enforcer", "delete", R"(ElVg)", {{0, 3}}},
        {"co-A2", "SComponent", "complete", R"(EHVg)", {{1, 0}, {3, 1}, {3, 5}}},
        {"co-A2", "BasicUnit", "complete", R"(EhV_)", {{4, 5}, {3, 1}}},
        {"co-A2", "Enforcer", "complete", R"(EgVg)", {{2, 3}}},
        {"A3", "SComponent", "delete", R"(ElFG)", {{0, 3}, {2, 1}, {3, 2}}},
        {"A3", "BasicUnit", "delete", R"(ElFG)", {{0, 3}, {1, 2}}},
        {"A3", "Enforcer", "delete", R"(ElFG)", {{0, 3}}},
        {"A3", "Enforcer", "complete", R"(E`FG)", {{1, 2}}},
        {"co-A3", "SComponent", "delete", R"(Eldg)", {{2, 5}, {3, 4}, {2, 3}}},
        {"co-A3", "BasicUnit", "delete", R"(Eldg)", {{2, 5}, {3, 4}}},
        {"co-A3", "Enforcer", "delete", R"(Eldg)", {{2, 5}}},
        {"A4", "SComponent", "delete", R"(GxkL[c)", {{7, 3}, {1, 2}, {6, 5}}},
        {"A4", "BasicUnit", "delete", R"(GxkL[c)", {{7, 3}, {6, 5}}},
        {"A4", "Enforcer", "delete", R"(GxkL[c)", {{3, 7}}},
        {"A4", "Enforcer", "complete", R"(GXkL[C)", {{0, 1}}},
        {"A5", "SComponent", "delete", R"(HnFWMlH)", {{8, 4}, {2, 3}, {7, 6}}},
        {"A5", "BasicUnit", "delete", R"(HnFWMlH)", {{8, 4}, {7, 6}}},
        {"A5", "Enforcer", "delete", R"(HnFWMlH)", {{4, 8}}},
        {"A5", "Enforcer", "complete", R"(HfFWMl@)", {{1, 2}}},
        {"co-A6", "Enforcer", "complete", R"(ETFW)", {{2, 1}}},
        {"co-A7", "SComponent", "delete", R"(EnFW)", {{3, 0}, {3, 4}, {3, 2}}},
        {"co-A7", "BasicUnit", "delete", R"(EnFW)", {{3, 0}, {1, 2}}},
        {"co-A7", "SComponent", "complete", R"(EjBW)", {{4, 3}, {0, 2}, {0, 4}}},
        {"co-A7", "BasicUnit", "complete", R"(EbFW)", {{1, 2}, {3, 0}}},
        {"co-A7", "Enforcer", "complete", R"(EjBW)", {{3, 4}}},
        {"co-A8", "SComponent", "complete", R"(EWFg)", {{2, 3}, {0, 1}, {1, 3}}},
        {"co-A8", "BasicUnit", "complete", R"(EWFg)", {{2, 3}, {0, 1}}},
        {"co-A8", "Enforcer", "complete", R"(EXBg)", {{4, 3}}},
        {"co-A9", "SComponent", "delete", R"(FnFYW)", {{4, 6}, {2, 1}, {2, 3}}},
        {"co-A9", "BasicUnit", "delete", R"(FnFYW)", {{4, 6}, {2, 1}}},
        {"co-A9", "SComponent", "complete", R"(FmFYG)", {{3, 2}, {4, 6}, {6, 2}}},
        {"co-A9", "BasicUnit", "complete", R"(FfFYG)", {{2, 1}, {4, 6}}},
        {"co-A9", "Enforcer", "complete", R"(FnFWG)", {{1, 6}}},
        {"co-B1", "SComponent", "complete", R"(Ej[w)", {{0, 5}, {2, 0}, {0, 4}}},
        {"co-B1", "BasicUnit", "complete", R"(Ei]w)", {{3, 2}, {0, 4}}},
        {"co-B1", "Enforcer", "complete", R"(Ej[w)", {{0, 5}}},
        {"co-B2", "SComponent", "complete", R"(FnfY?)", {{6, 5}, {4, 2}, {2, 6}}},
        {"co-B2", "BasicUnit", "complete", R"(FnfY?)", {{6, 5}, {4, 2}}},
        {"co-B2", "Enforcer", "complete", R"(FnfY?)", {{5, 6}}},
        {"co-B3", "SComponent", "complete", R"(G{jjAG)", {{4, 3}, {3, 6}, {6, 7}}},
        {"co-B3", "BasicUnit", "complete", R"(G{jjAG)", {{4, 3}, {6, 7}}},
        {"co-B3", "Enforcer", "complete", R"(G{jjAG)", {{3, 4}}},
    };
    return rows;
}

}  // namespace hfree::data
