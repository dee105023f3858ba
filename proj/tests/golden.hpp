#pragma once

// Published reference values used by the acceptance and CLI tests.

#include <array>

namespace golden {

// m_1..m_70 of the Minkowski measure.
inline constexpr std::array<const char*, 70> kPublishedMoments{
    "0.50000000000000000000000000000000000000000000000000",
    "0.29092647642930873638069776273912029008043710219559",
    "0.18638971464396310457104664410868043512065565329339",
    "0.12699225840744313520289222788021163884118514576173",
    "0.090164454945335997055486162852728371901870108915328",
    "0.065928162577472341926815287122643139097250419686219",
    "0.049294310463767495715873019738162192824596016540408",
    "0.037518711852048335539887123885001326828330311845185",
    "0.028979622034097514125202534817631105526453454918480",
    "0.022665858176292038567084595433830909709028113615601",
    "0.017920859234922559709620674061965959387422365122601",
    "0.014304689510828028713327933529010923388486775628519",
    "0.011515014023688037216614175868946822321198574437066",
    "0.0093396445516456630408229433763950525836249376062925",
    "0.0076269557590972324137284663579204452441313886605484",
    "0.0062668792729955855181245666105463942184539549010276",
    "0.0051783877867685200880408849955806484581000333322566",
    "0.0043010785465847754710770555353762470229805125766226",
    "0.0035894093787684071613366998806631220004089279356802",
    "0.0030086867071149232599754021703205599242915788661537",
    "0.0025322317634222266277036639307882264778052530156116",
    "0.0021393519928752509332902769549514723550086345056961",
    "0.0018138708773921687964413975361770115813330394837942",
    "0.0015430503000888974750639610156922661098154179170794",
    "0.0013167923220646751068501044957069765425398359511571",
    "0.0011270421715775897395157816468683456633974505562164",
    "0.00096733770677037783561122437105791592882537796051057",
    "0.00083246658220639104473557479405732069610975267509581",
    "0.00071820335559030841469949022408376381202557302200995",
    "0.00062110644645096567556056888154034901542203410280702",
    "0.00053836027103037905202629197075705905383821217884329",
    "0.00046765173455275558510114895133989297915712195884076",
    "0.00040707303776263157571881765213893343503728847982982",
    "0.00035504477084132941930948314931026013893192071414219",
    "0.00031025474516371162917662025303647309624750426315414",
    "0.00027160910474659558624707454363471603060022780445456",
    "0.00023819307170515894210646197643373870213103110230062",
    "0.00020923928922626913333968336609713458623759072879973",
    "0.00018410218544426637502507882484141316037994511212385",
    "0.00016223713098006110726991119269902592433404152806255",
    "0.00014318342992835510310721778791488526305144139896956",
    "0.00012655038932266879782766519282463067535339428877894",
    "0.00011200587071717784852138503115054268313120729105696",
    "0.000099266850721688056248146847039352100867092413446553",
    "0.000088091613483408666548718142966352919966384794835161",
    "0.000078273273509573469871441756231586836413236191991855",
    "0.000069634386611004882448594820251627462598040246563183",
    "0.000062022453717890701051430866178792091112759697349794",
    "0.000055306159621487594284446897034200886840998808601394",
    "0.000049372218434717208976312359496974514537772757968773",
    "0.000044122721362726073881354844160254923500862547763273",
    "0.000039472901486704070959737735999458212044994283495032",
    "0.000035349245666258223798489554957594867788549703093561",
    "0.000031687896118933003424939851849986040400796168900580",
    "0.000028433294336821167964517994319875407187553962659664",
    "0.000025537028219094604542709782295425670986358747374410",
    "0.000022956850006417952618424640438139791507342597816299",
    "0.000020655838092375878340873282295400282104460092785749",
    "0.000018601680291880423863588358493197745228211014253879",
    "0.000016766059853447792758997531437488191617648704513657",
    "0.000015124128560475439274975373678569160508643322805383",
    "0.000013654053796046797396039913645973219220649444564075",
    "0.000012336628542866380312339531772945578083278145703849",
    "0.000011154935032657469162573155131448984539990112465750",
    "0.000010094054210908289421180310562947718378648386875946",
    "0.0000091408143945475299648985162271152064510786088610998",
    "0.0000082835735137657351740548705254404013142671182635503",
    "0.0000075120301789106204917387855457822400686084713220510",
    "0.0000068170595271178220756077387776286434567656799242417",
    "0.0000061905704040288945388332526110642901215894448069398",
};

// m_100 of the Minkowski measure.
inline constexpr const char* kM100 = "0.000000444593386091498";

// a_1^2..a_40^2 of the Minkowski measure (b_k = 1/2).
inline constexpr std::array<const char*, 40> kRecurrenceA2{
    "0.040926476429308736381",
    "0.034881265506134342903",
    "0.045430415370805808038",
    "0.038973377115288248098",
    "0.052863907245188596784",
    "0.037955175327144719607",
    "0.059731637094523918352",
    "0.038238400877758730555",
    "0.058672115522904960765",
    "0.046255346737208862213",
    "0.050520824434494850803",
    "0.051910925145095030363",
    "0.056489563093038456301",
    "0.040208992500495472293",
    "0.071218137450141992615",
    "0.039427602611174900647",
    "0.059396186789821055700",
    "0.053652031489601189600",
    "0.053884790282064402379",
    "0.050381653151077022836",
    "0.057911359198380156348",
    "0.053527412587600219313",
    "0.057334758849746482997",
    "0.044067432839352949172",
    "0.073234222409597016726",
    "0.043818059541906812748",
    "0.056063579773800371687",
    "0.058703247843561897668",
    "0.057201243688393241195",
    "0.049069569275476665894",
    "0.064554576616699275413",
    "0.045732073443752859070",
    "0.069343850504209381053",
    "0.049351815705867268360",
    "0.053031677464673738708",
    "0.061496568432752989923",
    "0.058321435643186334303",
    "0.052208175547033955364",
    "0.056607898016942758422",
    "0.055895931809777873999",
};

// g_k = (a_1^2 ... a_k^2)^(1/k), k = 1..40.
inline constexpr std::array<const char*, 40> kGeometricMeans{
    "0.040926476429308736381",
    "0.037783161468586334476",
    "0.040177332455719534022",
    "0.039872900960755211548",
    "0.042186560554634906505",
    "0.041449910727599868208",
    "0.043670914641443765852",
    "0.042951735555887041699",
    "0.044466283404646215085",
    "0.044642030777323595493",
    "0.045146924287480657337",
    "0.045675227441320883038",
    "0.046427976597463213256",
    "0.045953497782193798426",
    "0.047315493717202662999",
    "0.046779242858071064616",
    "0.047440963915026139792",
    "0.047766342240858080778",
    "0.048070312391450962315",
    "0.048183319646452786085",
    "0.048607122313805874900",
    "0.048820630103435556238",
    "0.049163047752620715919",
    "0.048939412842737333783",
    "0.049734867738244766161",
    "0.049493171229376460057",
    "0.049722196075856275919",
    "0.050017931134405002549",
    "0.050249919542639211311",
    "0.050210120837211061076",
    "0.050618791840573811015",
    "0.050458453441009796727",
    "0.050946927334564490546",
    "0.050899284439881664328",
    "0.050959003303570963593",
    "0.051225761593643949404",
    "0.051405681461085926182",
    "0.051426640855254603168",
    "0.051553375093489825709",
    "0.051657713625567224389",
};

// Arithmetic mean of a_1^2..a_40^2.
inline constexpr const char* kMeanA2 = "0.05246234283";

struct EmpiricalEntry {
  int n;
  int level;
  const char* a2;
};

// Largest a_{n,N}^2 of the empirical measures q_N, N = 10..18.
inline constexpr std::array<EmpiricalEntry, 9> kEmpiricalA2{{
    {5, 10, "0.0973813815"},
    {5, 11, "0.0929448256"},
    {7, 12, "0.0860780825"},
    {7, 13, "0.0953811702"},
    {7, 14, "0.0964882611"},
    {7, 15, "0.0896426756"},
    {9, 16, "0.0911621120"},
    {9, 17, "0.0927763299"},
    {9, 18, "0.0872304015"},
}};

}  // namespace golden
