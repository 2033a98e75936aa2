#pragma once

// Generated by tools/gen_identities.py; do not edit by hand.

#include <cstdint>
#include <string_view>

namespace rankforge::builtin {

inline constexpr std::uint64_t kChecksum = 0xd7f02036cde8ac19ULL;

inline constexpr std::string_view kJson = R"json({"entries":[{"id":"rank5","kind":"group","identities":[{"p":5,"m":0,"vectors":[],"terms":[],"provenance":"K_{5,0} vanishes"},{"p":5,"m":1,"vectors":[[3,-2,1]],"terms":[{"coeff":["1/1","0/1","0/1","0/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null}],"provenance":"5-dissection slice m=1"},{"p":5,"m":2,"vectors":[[3,-1,0]],"terms":[{"coeff":["1/1","0/1","0/1","0/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null}],"provenance":"5-dissection slice m=2"},{"p":5,"m":3,"vectors":[[3,0,-1]],"terms":[{"coeff":["-1/1","0/1","-1/1","-1/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null}],"provenance":"5-dissection slice m=3"},{"p":5,"m":4,"vectors":[[3,1,-2]],"terms":[{"coeff":["1/1","0/1","1/1","1/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null}],"provenance":"5-dissection slice m=4"}]},{"id":"rank7","kind":"group","identities":[{"p":7,"m":0,"vectors":[],"terms":[],"provenance":"K_{7,0} vanishes"},{"p":7,"m":1,"vectors":[[3,1,-1,-1]],"terms":[{"coeff":["-1/1","0/1","0/1","-1/1","-1/1","0/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null}],"provenance":"7-dissection slice m=1"},{"p":7,"m":2,"vectors":[[3,-1,-1,1]],"terms":[{"coeff":["-2/1","0/1","-1/1","-1/1","-1/1","-1/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null}],"provenance":"7-dissection slice m=2"},{"p":7,"m":3,"vectors":[[3,-1,0,0]],"terms":[{"coeff":["1/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null}],"provenance":"7-dissection slice m=3"},{"p":7,"m":4,"vectors":[[3,-1,1,-1]],"terms":[{"coeff":["-1/1","0/1","-1/1","-1/1","-1/1","-1/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null}],"provenance":"7-dissection slice m=4"},{"p":7,"m":5,"vectors":[[3,0,-1,0]],"terms":[{"coeff":["1/1","0/1","1/1","0/1","0/1","1/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null}],"provenance":"7-dissection slice m=5"},{"p":7,"m":6,"vectors":[[3,0,0,-1]],"terms":[{"coeff":["0/1","0/1","-1/1","0/1","0/1","-1/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null}],"provenance":"7-dissection slice m=6"}]},{"id":"rank11id0","kind":"identity","identities":[{"p":11,"m":0,"vectors":[[15,-4,-2,-3,-2,-2]],"terms":[{"coeff":["-1/1","0/1","-1/1","-1/1","-2/1","-1/1","-1/1","-2/1","-1/1","-1/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null},{"coeff":["4/1","0/1","4/1","1/1","2/1","2/1","2/1","2/1","1/1","4/1"],"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":null},{"coeff":["-3/1","0/1","-1/1","-2/1","1/1","-2/1","-2/1","1/1","-2/1","-1/1"],"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":null},{"coeff":["3/1","0/1","0/1","2/1","2/1","0/1","0/1","2/1","2/1","0/1"],"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":null},{"coeff":["1/1","0/1","2/1","2/1","1/1","0/1","0/1","1/1","2/1","2/1"],"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":null}],"provenance":"K_{11,0} in terms of j(11, pi_r(n1))"}]},{"id":"rank11id0_alt","kind":"identity","identities":[{"p":11,"m":0,"vectors":[[15,-2,-2,-2,-3,-4]],"terms":[{"coeff":["1/1","0/1","2/1","2/1","1/1","0/1","0/1","1/1","2/1","2/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null},{"coeff":["-1/1","0/1","-1/1","-1/1","-2/1","-1/1","-1/1","-2/1","-1/1","-1/1"],"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":null},{"coeff":["3/1","0/1","0/1","2/1","2/1","0/1","0/1","2/1","2/1","0/1"],"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":null},{"coeff":["4/1","0/1","4/1","1/1","2/1","2/1","2/1","2/1","1/1","4/1"],"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":null},{"coeff":["-3/1","0/1","-1/1","-2/1","1/1","-2/1","-2/1","1/1","-2/1","-1/1"],"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":null}],"provenance":"earlier K_{11,0} identity used to illustrate the coefficient symmetry"}]},{"id":"rank11id1","kind":"identity","identities":[{"p":11,"m":1,"vectors":[[15,-4,-2,-3,-2,-2]],"terms":[{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":{"num":5,"den":1}},{"coeff":["5/1","0/1","5/1","1/1","4/1","2/1","2/1","4/1","1/1","5/1"],"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":{"num":5,"den":1}},{"coeff":["-1/1","0/1","-5/1","0/1","-3/1","-2/1","-2/1","-3/1","0/1","-5/1"],"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":{"num":5,"den":1}},{"coeff":["-2/1","0/1","1/1","-1/1","-1/1","0/1","0/1","-1/1","-1/1","1/1"],"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":{"num":5,"den":1}},{"coeff":["-5/1","0/1","-6/1","-2/1","-3/1","-5/1","-5/1","-3/1","-2/1","-6/1"],"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":{"num":5,"den":1}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":{"num":4,"den":5}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":{"num":4,"den":5}},{"coeff":["1/1","0/1","1/1","1/1","0/1","1/1","1/1","0/1","1/1","1/1"],"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":{"num":4,"den":5}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":{"num":4,"den":5}},{"coeff":["-1/1","0/1","-2/1","-1/1","-1/1","-1/1","-1/1","-1/1","-1/1","-2/1"],"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":{"num":4,"den":5}}],"provenance":"K_{11,1}, quadratic residue case","lhs":{"class":"residue","witness":5,"shift":"-1/1","correction":["1/1","0/1","2/1","1/1","1/1","1/1","1/1","1/1","1/1","2/1"]}}]},{"id":"rank11id2","kind":"identity","identities":[{"p":11,"m":2,"vectors":[[15,-4,-2,-3,-2,-2]],"terms":[{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":{"num":4,"den":1}},{"coeff":["-6/1","0/1","-4/1","-2/1","-3/1","-3/1","-3/1","-3/1","-2/1","-4/1"],"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":{"num":4,"den":1}},{"coeff":["-1/1","0/1","0/1","-2/1","1/1","-1/1","-1/1","1/1","-2/1","0/1"],"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":{"num":4,"den":1}},{"coeff":["6/1","0/1","3/1","3/1","1/1","2/1","2/1","1/1","3/1","3/1"],"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":{"num":4,"den":1}},{"coeff":["0/1","0/1","-1/1","-1/1","-1/1","0/1","0/1","-1/1","-1/1","-1/1"],"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":{"num":4,"den":1}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":{"num":3,"den":4}},{"coeff":["1/1","0/1","1/1","0/1","1/1","0/1","0/1","1/1","0/1","1/1"],"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":{"num":3,"den":4}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":{"num":3,"den":4}},{"coeff":["-2/1","0/1","0/1","-1/1","-1/1","0/1","0/1","-1/1","-1/1","0/1"],"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":{"num":3,"den":4}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":{"num":3,"den":4}}],"provenance":"K_{11,2}, quadratic non-residue case","lhs":{"class":"nonresidue"}}]},{"id":"rank13id1","kind":"identity","identities":[{"p":13,"m":0,"vectors":[[15,-2,-3,-2,-1,-3,-2]],"terms":[{"coeff":["5/1","0/1","3/1","3/1","0/1","5/1","1/1","1/1","5/1","0/1","3/1","3/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null},{"coeff":["-2/1","0/1","1/1","-3/1","-1/1","2/1","-2/1","-2/1","2/1","-1/1","-3/1","1/1"],"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":null},{"coeff":["6/1","0/1","5/1","1/1","5/1","2/1","3/1","3/1","2/1","5/1","1/1","5/1"],"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":null},{"coeff":["-1/1","0/1","1/1","2/1","2/1","0/1","0/1","0/1","0/1","2/1","2/1","1/1"],"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":null},{"coeff":["-1/1","0/1","-1/1","-1/1","-2/1","-1/1","-2/1","-2/1","-1/1","-2/1","-1/1","-1/1"],"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":null},{"coeff":["3/1","0/1","-1/1","0/1","2/1","2/1","-1/1","-1/1","2/1","2/1","0/1","-1/1"],"vec":0,"r":6,"eta_ratio_pow":0,"prefactor":null},{"coeff":["13/1","0/1","0/1","13/1","-13/1","13/1","0/1","0/1","13/1","-13/1","13/1","0/1"],"vec":0,"r":1,"eta_ratio_pow":2,"prefactor":null},{"coeff":["-26/1","0/1","0/1","-13/1","-13/1","0/1","-13/1","-13/1","0/1","-13/1","-13/1","0/1"],"vec":0,"r":2,"eta_ratio_pow":2,"prefactor":null},{"coeff":["26/1","0/1","26/1","0/1","13/1","13/1","13/1","13/1","13/1","13/1","0/1","26/1"],"vec":0,"r":3,"eta_ratio_pow":2,"prefactor":null},{"coeff":["13/1","0/1","13/1","13/1","13/1","13/1","0/1","0/1","13/1","13/1","13/1","13/1"],"vec":0,"r":4,"eta_ratio_pow":2,"prefactor":null},{"coeff":["0/1","0/1","0/1","0/1","0/1","-13/1","0/1","0/1","-13/1","0/1","0/1","0/1"],"vec":0,"r":5,"eta_ratio_pow":2,"prefactor":null},{"coeff":["0/1","0/1","-13/1","-13/1","0/1","0/1","-13/1","-13/1","0/1","0/1","-13/1","-13/1"],"vec":0,"r":6,"eta_ratio_pow":2,"prefactor":null}],"provenance":"K_{13,0}"}]},{"id":"rank13id2","kind":"identity","identities":[{"p":13,"m":2,"vectors":[[15,-2,-3,-2,-1,-3,-2]],"terms":[{"coeff":["1/1","0/1","0/1","1/1","-3/1","1/1","-2/1","-2/1","1/1","-3/1","1/1","0/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":{"num":1,"den":6}},{"coeff":["-1/1","0/1","-1/1","-1/1","-2/1","-1/1","-3/1","-3/1","-1/1","-2/1","-1/1","-1/1"],"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":{"num":1,"den":6}},{"coeff":["-1/1","0/1","-1/1","0/1","-1/1","-1/1","0/1","0/1","-1/1","-1/1","0/1","-1/1"],"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":{"num":1,"den":6}},{"coeff":["0/1","0/1","0/1","-1/1","0/1","-1/1","1/1","1/1","-1/1","0/1","-1/1","0/1"],"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":{"num":1,"den":6}},{"coeff":["2/1","0/1","-1/1","-5/1","-7/1","-9/1","-12/1","-12/1","-9/1","-7/1","-5/1","-1/1"],"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":{"num":1,"den":6}},{"coeff":["-3/1","0/1","4/1","2/1","-5/1","-3/1","2/1","2/1","-3/1","-5/1","2/1","4/1"],"vec":0,"r":6,"eta_ratio_pow":0,"prefactor":{"num":1,"den":6}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":1,"eta_ratio_pow":-2,"prefactor":{"num":1,"den":6}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":2,"eta_ratio_pow":-2,"prefactor":{"num":1,"den":6}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":3,"eta_ratio_pow":-2,"prefactor":{"num":1,"den":6}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":4,"eta_ratio_pow":-2,"prefactor":{"num":1,"den":6}},{"coeff":["-1/1","0/1","-1/1","-1/1","-2/1","-2/1","-2/1","-2/1","-2/1","-2/1","-1/1","-1/1"],"vec":0,"r":5,"eta_ratio_pow":-2,"prefactor":{"num":1,"den":6}},{"coeff":["0/1","0/1","0/1","0/1","0/1","-1/1","1/1","1/1","-1/1","0/1","0/1","0/1"],"vec":0,"r":6,"eta_ratio_pow":-2,"prefactor":{"num":1,"den":6}},{"coeff":["26/1","0/1","13/1","13/1","0/1","13/1","0/1","0/1","13/1","0/1","13/1","13/1"],"vec":0,"r":1,"eta_ratio_pow":2,"prefactor":{"num":1,"den":6}},{"coeff":["0/1","0/1","0/1","-13/1","0/1","0/1","-13/1","-13/1","0/1","0/1","-13/1","0/1"],"vec":0,"r":2,"eta_ratio_pow":2,"prefactor":{"num":1,"den":6}},{"coeff":["-13/1","0/1","-13/1","0/1","-13/1","0/1","-13/1","-13/1","0/1","-13/1","0/1","-13/1"],"vec":0,"r":3,"eta_ratio_pow":2,"prefactor":{"num":1,"den":6}},{"coeff":["0/1","0/1","0/1","0/1","-13/1","0/1","0/1","0/1","0/1","-13/1","0/1","0/1"],"vec":0,"r":4,"eta_ratio_pow":2,"prefactor":{"num":1,"den":6}},{"coeff":["0/1","0/1","-13/1","-13/1","-13/1","-26/1","-26/1","-26/1","-26/1","-13/1","-13/1","-13/1"],"vec":0,"r":5,"eta_ratio_pow":2,"prefactor":{"num":1,"den":6}},{"coeff":["-13/1","0/1","13/1","0/1","-13/1","-13/1","0/1","0/1","-13/1","-13/1","0/1","13/1"],"vec":0,"r":6,"eta_ratio_pow":2,"prefactor":{"num":1,"den":6}}],"provenance":"K_{13,2}, quadratic residue case","lhs":{"class":"residue","witness":4,"shift":"0/1","correction":["0/1","0/1","0/1","0/1","0/1","-1/1","1/1","1/1","-1/1","0/1","0/1","0/1"]}}]},{"id":"rank13id3","kind":"identity","identities":[{"p":13,"m":1,"vectors":[[15,-2,-3,-2,-1,-3,-2]],"terms":[{"coeff":["2/1","0/1","1/1","0/1","0/1","-1/1","0/1","0/1","-1/1","0/1","0/1","1/1"],"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":{"num":1,"den":5}},{"coeff":["6/1","0/1","-1/1","4/1","1/1","-4/1","3/1","3/1","-4/1","1/1","4/1","-1/1"],"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":{"num":1,"den":5}},{"coeff":["3/1","0/1","3/1","1/1","2/1","1/1","2/1","2/1","1/1","2/1","1/1","3/1"],"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":{"num":1,"den":5}},{"coeff":["-1/1","0/1","2/1","4/1","3/1","2/1","-1/1","-1/1","2/1","3/1","4/1","2/1"],"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":{"num":1,"den":5}},{"coeff":["-1/1","0/1","-3/1","-5/1","-8/1","-10/1","-11/1","-11/1","-10/1","-8/1","-5/1","-3/1"],"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":{"num":1,"den":5}},{"coeff":["0/1","0/1","1/1","0/1","-1/1","-2/1","0/1","0/1","-2/1","-1/1","0/1","1/1"],"vec":0,"r":6,"eta_ratio_pow":0,"prefactor":{"num":1,"den":5}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":1,"eta_ratio_pow":-2,"prefactor":{"num":1,"den":5}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":2,"eta_ratio_pow":-2,"prefactor":{"num":1,"den":5}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":3,"eta_ratio_pow":-2,"prefactor":{"num":1,"den":5}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":4,"eta_ratio_pow":-2,"prefactor":{"num":1,"den":5}},{"coeff":["2/1","0/1","1/1","0/1","0/1","-1/1","0/1","0/1","-1/1","0/1","0/1","1/1"],"vec":0,"r":5,"eta_ratio_pow":-2,"prefactor":{"num":1,"den":5}},{"coeff":["0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1","0/1"],"vec":0,"r":6,"eta_ratio_pow":-2,"prefactor":{"num":1,"den":5}},{"coeff":["-13/1","0/1","-13/1","-13/1","-13/1","-13/1","-13/1","-13/1","-13/1","-13/1","-13/1","-13/1"],"vec":0,"r":1,"eta_ratio_pow":2,"prefactor":{"num":1,"den":5}},{"coeff":["13/1","0/1","-13/1","13/1","0/1","-13/1","0/1","0/1","-13/1","0/1","13/1","-13/1"],"vec":0,"r":2,"eta_ratio_pow":2,"prefactor":{"num":1,"den":5}},{"coeff":["26/1","0/1","13/1","0/1","13/1","0/1","13/1","13/1","0/1","13/1","0/1","13/1"],"vec":0,"r":3,"eta_ratio_pow":2,"prefactor":{"num":1,"den":5}},{"coeff":["0/1","0/1","13/1","13/1","13/1","0/1","0/1","0/1","0/1","13/1","13/1","13/1"],"vec":0,"r":4,"eta_ratio_pow":2,"prefactor":{"num":1,"den":5}},{"coeff":["0/1","0/1","0/1","-13/1","-13/1","-13/1","-26/1","-26/1","-13/1","-13/1","-13/1","0/1"],"vec":0,"r":5,"eta_ratio_pow":2,"prefactor":{"num":1,"den":5}},{"coeff":["0/1","0/1","0/1","0/1","-13/1","-13/1","0/1","0/1","-13/1","-13/1","0/1","0/1"],"vec":0,"r":6,"eta_ratio_pow":2,"prefactor":{"num":1,"den":5}}],"provenance":"K_{13,1}, quadratic non-residue case","lhs":{"class":"nonresidue"}}]},{"id":"rank17id1","kind":"skeleton","identities":[{"p":17,"m":0,"vectors":[[15,-3,-1,-2,-1,-2,-1,-2,-1],[27,-2,-2,-3,-2,-4,-4,-4,-4]],"terms":[{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":6,"prefactor":null},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":6,"prefactor":null},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":6,"prefactor":null},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":6,"prefactor":null},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":6,"prefactor":null},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":6,"prefactor":null},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":6,"prefactor":null},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":6,"prefactor":null},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":3,"prefactor":null},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":3,"prefactor":null}],"provenance":"K_{17,0}; coefficients to be solved","zero_terms":[]}]},{"id":"rank17id2","kind":"skeleton","identities":[{"p":17,"m":12,"vectors":[[15,-3,-1,-2,-1,-2,-1,-2,-1],[27,-2,-2,-3,-2,-4,-4,-4,-4]],"terms":[{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":6,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":6,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":6,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":6,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":6,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":6,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":6,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":6,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":0,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":3,"prefactor":{"num":7,"den":5}}],"provenance":"K_{17,12}; coefficients to be solved","zero_terms":[0,1,2,3,4,5,7],"lhs":{"class":"residue","witness":3,"shift":"0/1","correction":["-3/1","0/1","-1/1","-1/1","-1/1","-1/1","-1/1","-1/1","-1/1","-1/1","-1/1","-1/1","-1/1","-1/1","-1/1","-1/1"]}}]},{"id":"rank17id3","kind":"skeleton","identities":[{"p":17,"m":1,"vectors":[[15,-3,-1,-2,-1,-2,-1,-2,-1],[27,-2,-2,-3,-2,-4,-4,-4,-4]],"terms":[{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":6,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":6,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":6,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":6,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":6,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":6,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":6,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":6,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":-3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":0,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":3,"prefactor":{"num":7,"den":8}}],"provenance":"K_{17,1}; coefficients to be solved","zero_terms":[26,28,29,30],"lhs":{"class":"nonresidue"}}]},{"id":"rank19id1","kind":"skeleton","identities":[{"p":19,"m":0,"vectors":[[27,-3,-2,-4,-4,-3,-3,-2,-3,-1],[39,-5,-2,-5,-5,-3,-5,-2,-5,-5],[39,-5,-4,-3,-4,-5,-4,-4,-5,-3]],"terms":[{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":9,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":0,"r":9,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":0,"r":9,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":9,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":1,"r":9,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":1,"r":9,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":2,"r":1,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":2,"r":2,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":2,"r":3,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":2,"r":4,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":2,"r":5,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":2,"r":6,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":2,"r":7,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":2,"r":8,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":2,"r":9,"eta_ratio_pow":0,"prefactor":null},{"coeff":null,"vec":2,"r":1,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":2,"r":2,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":2,"r":3,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":2,"r":4,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":2,"r":5,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":2,"r":6,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":2,"r":7,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":2,"r":8,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":2,"r":9,"eta_ratio_pow":4,"prefactor":null},{"coeff":null,"vec":2,"r":1,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":2,"r":2,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":2,"r":3,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":2,"r":4,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":2,"r":5,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":2,"r":6,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":2,"r":7,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":2,"r":8,"eta_ratio_pow":8,"prefactor":null},{"coeff":null,"vec":2,"r":9,"eta_ratio_pow":8,"prefactor":null}],"provenance":"K_{19,0}; coefficients to be solved","zero_terms":[]}]},{"id":"rank19id2","kind":"skeleton","identities":[{"p":19,"m":15,"vectors":[[39,-5,-5,-4,-5,-4,-5,-3,-5,-1],[39,-3,-5,-5,-5,-3,-2,-4,-5,-5],[39,-4,-5,-4,-3,-3,-4,-5,-5,-4]],"terms":[{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":9,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":9,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":9,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":0,"r":9,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":9,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":9,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":9,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":1,"r":9,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":1,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":2,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":3,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":4,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":5,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":6,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":7,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":8,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":9,"eta_ratio_pow":-4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":1,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":2,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":3,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":4,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":5,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":6,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":7,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":8,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":9,"eta_ratio_pow":0,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":1,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":2,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":3,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":4,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":5,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":6,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":7,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":8,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":9,"eta_ratio_pow":4,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":1,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":2,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":3,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":4,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":5,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":6,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":7,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":8,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}},{"coeff":null,"vec":2,"r":9,"eta_ratio_pow":8,"prefactor":{"num":6,"den":5}}],"provenance":"K_{19,15}; coefficients to be solved","zero_terms":[27,28,29,30,31,32,33,34,35,36,37,38,40,41,42,43,44,45,46,49,52,53],"lhs":{"class":"residue","witness":3,"shift":"0/1","correction":["3/1","0/1","1/1","1/1","1/1","1/1","1/1","1/1","1/1","1/1","1/1","1/1","1/1","1/1","1/1","1/1","1/1","1/1"]}}]},{"id":"rank19id3","kind":"skeleton","identities":[{"p":19,"m":1,"vectors":[[39,-5,-5,-4,-5,-4,-5,-3,-5,-1],[39,-3,-5,-5,-5,-3,-2,-4,-5,-5],[39,-4,-5,-4,-3,-3,-4,-5,-5,-4]],"terms":[{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":9,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":9,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":9,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":1,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":2,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":3,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":4,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":5,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":6,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":7,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":8,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":0,"r":9,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":9,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":9,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":9,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":1,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":2,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":3,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":4,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":5,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":6,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":7,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":8,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":1,"r":9,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":1,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":2,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":3,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":4,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":5,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":6,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":7,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":8,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":9,"eta_ratio_pow":-4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":1,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":2,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":3,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":4,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":5,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":6,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":7,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":8,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":9,"eta_ratio_pow":0,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":1,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":2,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":3,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":4,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":5,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":6,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":7,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":8,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":9,"eta_ratio_pow":4,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":1,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":2,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":3,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":4,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":5,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":6,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":7,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":8,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}},{"coeff":null,"vec":2,"r":9,"eta_ratio_pow":8,"prefactor":{"num":8,"den":9}}],"provenance":"K_{19,1}; coefficients to be solved","zero_terms":[27,28,29,30,31,32,33,34,35,36,37,38,39,40,41,42,43,44,45,46,48,49,50,51,53],"lhs":{"class":"nonresidue"}}]}]})json";

}  // namespace rankforge::builtin
