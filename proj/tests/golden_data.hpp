// Reference values computed independently with 40-digit arithmetic,
// frozen here for regression testing. Do not edit by hand.
#pragma once
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace golden {

struct OrderValue { int order; double value; };

inline const std::vector<double> stieltjes = {0.5772156649015328606065121, -0.07281584548367672486058638, -0.009690363192872318484530386, 0.002053834420303345866160047, 0.002325370065467300057468170, 0.0007933238173010627017533349, -0.0002387693454301996098724218, -0.0005272895670577510460740975, -0.0003521233538030395096020522, -0.00003439477441808804817791462, 0.0002053328149090647946837223, 0.0002701844395439035266729021, 0.0001672729121051401933535015, -0.00002746380660376015886000760, -0.0002092092620592999458371397, -0.0002834686553202414466429345, -0.0001996968583089697747077846, 0.00002627703710991833669946660, 0.0003073684081492528265927548, 0.0005036054530473556290555964, 0.0004663435615115594494005948, 0.0001044377697560001158107957, -0.0005415995822039977016551962, -0.001243962090408245779299742, -0.001588511278903561561906197, -0.001074591952738488824724292, 0.0006568035186371544315047730, 0.003477836913618538209007360, 0.006400068531700629458107228, 0.007371151770472239134412402, 0.003557728855573160947913538};
inline const std::vector<double> A_n = {0.5772156649015328606065, -0.1875462328403652245972, 0.05168863203319289380201, -0.01475165882545374406458, 0.004524477888495378741246, -0.001446795204525183140217, 0.0004715440781854050503395, -0.0001551802941642302537480, 0.00005134521211814414337677, -0.00001704135704711064103203, 0.000005666050921040475372308};
inline const std::vector<double> thm1_leading_closed = {-1.097264024732662556808, 0.9305973580659958901409, -0.7986320123663312784038, 0.6972640247326625568076, -0.6180346543003353882629, 0.5547098008500332345409, -0.5030437464902087927220, 0.4601308412822677205049};
inline const std::vector<double> inc_gamma = {2.194528049465325113615, 1.597264024732662556808, 1.263930691399329223474, 1.048632012366331278404, 0.8972640247326625568076, 0.7847013209670020549295, 0.6975669437071760916838, 0.6280437464902087927220, 0.5712419523933788316160, 0.5239392636951203713433, 0.4839226400806323478079};
inline const std::vector<OrderValue> thm1_n1 = {{2, -1.097264024732662556808}, {1, 2.771743714366857974222}, {0, -4.695573717137379788225}, {-1, 5.603545069383100477687}, {-2, -10.70169690935794217198}, {-3, 26.78375121355050641116}, {-4, -64.23033267586547685729}, {-5, 182.5298424044288550764}, {-6, -437.6162785934793348768}};
inline const std::vector<OrderValue> thm1_n2 = {{3, 0.9305973580659958901409}, {2, -2.679507436783861761089}, {1, 5.706937153070862966446}, {0, -7.484308881416591277808}, {-1, 5.579990586622410131515}, {-2, -11.34693778885672802350}, {-3, 28.97865642568798554479}};
inline const std::vector<OrderValue> thm1_n3 = {{4, -0.7986320123663312784038}, {3, 2.617312384563792253009}, {2, -7.364535995246071317141}, {1, 14.63637440112851217615}, {0, -14.76654400682590457693}, {-1, 0.7765123961580725024583}, {-2, -2.508885404009950585427}, {-3, 6.678664343173366848937}};
inline const std::vector<OrderValue> thm1_n4 = {{5, 0.6972640247326625568076}, {4, -2.572250546519402195430}, {3, 9.290524507882215054178}, {2, -26.74697767246935450691}, {1, 50.47763620768339864313}, {0, -41.69374455253488831880}, {-1, -25.74237785877624609409}, {-2, 51.69543408541217477014}, {-3, -133.3533361983367198634}};
inline const std::vector<OrderValue> thm1_n5 = {{6, -0.6180346543003353882629}, {5, 2.537984118168043294427}, {4, -11.38877663199070236779}, {3, 44.02978551840311489192}, {2, -127.7883878366523603797}, {1, 242.7183808578439640464}, {0, -204.6150807340469690938}, {-1, -114.9674076669032557417}, {-2, 236.3391622351662907764}, {-3, -613.2081540069472741856}};
inline const std::vector<OrderValue> thm1_n6 = {{7, 0.5547098008500332345409}, {6, -2.510995593935465402985}, {5, 13.60480924990631653169}, {4, -66.55036676818247952343}, {3, 261.8699274725977661841}, {2, -772.0269314954979405413}, {1, 1503.075675857090441303}, {0, -1378.339186625709164150}, {-1, -383.7122441564679540870}, {-2, 809.7140051278922559891}, {-3, -2123.871103567686739507}};
inline const std::vector<OrderValue> thm1_n7 = {{8, -0.5030437464902087927220}, {7, 2.489161881579122374305}, {6, -15.90519725496741288391}, {5, 94.35042079817012181561}, {4, -468.3146964366689162101}, {3, 1861.354091635329487915}, {2, -5547.289849117021826236}, {1, 10982.31266593871860704}, {0, -10637.20183491760937539}, {-1, -1071.316337990904812109}, {-2, 2277.601102689411582197}, {-3, -5982.017727538653993680}};
inline const std::vector<OrderValue> thm1_n8 = {{9, 0.4601308412822677205049}, {8, -2.471120040012300354638}, {7, 18.26820090075497638336}, {6, -127.4578453627226654083}, {5, 762.9069183376291295268}, {4, -3805.956151978945774398}, {3, 15195.75715587749794828}, {2, -45500.67288519583470063}, {1, 90733.27403828751693066}, {0, -89894.98976906609390617}, {-1, -2638.750521574712904675}, {-2, 5728.536726581445413132}, {-3, -15235.45954567290886554}};
inline const std::vector<OrderValue> thm2 = {{1, 2.194528049465325113615}, {0, -3.348959379268390834828}, {-1, 3.847660005541043628007}, {-2, -7.359430133225157327368}, {-3, 17.89162369103177064460}, {-4, -42.69941899143746957645}, {-5, 118.3654966672841138758}, {-6, -287.0748628793609556323}};
inline const std::vector<OrderValue> thm3 = {{0, 5.389056098930650227230}, {-1, -17.06031571655592737165}, {-2, 33.41592728729622293592}, {-3, -86.63808922042397450096}, {-4, 213.4850050590997275444}, {-5, -621.0280503441558837681}, {-6, 1526.432607888540325788}};

// Laurent-coefficient vectors keyed by family parameters.
inline const std::map<std::string, std::vector<double>> c_kj = {
    {"1,0", {1.0000000000000000000, -0.42278433509846713939, 0.30805394774177863966, -0.31777648876055812220, 0.31919384524971018717, -0.31810751050571648371, 0.31765417450731041988, -0.31752212587689649390, 0.31748103333503100980}},
    {"1,1", {-1.0000000000000000000, 1.0000000000000000000, -0.73963792167595805054, 0.62657029441669994445, -0.59699857266204007679, 0.58863311678409777573, -0.58546382822999840176, 0.58420038991854945674, -0.58372380829564567410}},
    {"2,0", {1.0000000000000000000, -1.0000000000000000000, 0.73963792167595805054, -0.62657029441669994445, 0.59699857266204007679, -0.58863311678409777573, 0.58546382822999840176, -0.58420038991854945674, 0.58372380829564567410}},
    {"2,1", {-1.0000000000000000000, 1.5772156649015328606, -1.5043998194178561357, 1.2927357540368340732, -1.1638213584961744212, 1.1082479522612671806, -1.0864656381904198200, 1.0779010118489600654, -1.0744990524994405690}},
    {"3,2", {2.0000000000000000000, -4.3088626596061314424, 5.3503109729022992403, -5.3600013360951715587, 5.0249693826067738548, -4.7126155755010241999, 4.5109926521322492415, -4.4011736974578251090, 4.3470595834136822966}},
    {"4,1", {-1.0000000000000000000, 2.7316469947045985818, -4.0334573863248083291, 4.4664437024538176087, -4.3505957596846713104, 4.0902336350631443098, -3.8787922750870145745, 3.7501083720420949109, -3.6822228283835603122}},
};
inline const std::map<std::string, std::vector<double>> c_k2 = {
    {"1", {1.0000000000000000000, -0.42278433509846713939, 0.30805394774177863966, -0.31777648876055812220, 0.31919384524971018717, -0.31810751050571648371, 0.31765417450731041988, -0.31752212587689649390}},
    {"2", {1.0000000000000000000, -1.0000000000000000000, 0.73963792167595805054, -0.62657029441669994445, 0.59699857266204007679, -0.58863311678409777573, 0.58546382822999840176, -0.58420038991854945674}},
    {"3", {1.0000000000000000000, -1.5772156649015328606, 1.5043998194178561357, -1.2927357540368340732, 1.1638213584961744212, -1.1082479522612671806, 1.0864656381904198200, -1.0779010118489600654}},
};
inline const std::map<std::string, std::vector<double>> c_k3 = {
    {"1", {1.0000000000000000000, -1.0000000000000000000, 0.81245376715963477540, -0.70907650309324898780, 0.66482152661688775561, -0.64672361506290624064, 0.63948963904028032494, -0.63666037457116789464}},
    {"2", {1.0000000000000000000, -1.5772156649015328606, 1.5772156649015328606, -1.4172724093796108559, 1.2929245260623106672, -1.2247244020693285214, 1.1920809216739008799, -1.1774924277608674938}},
    {"3", {1.0000000000000000000, -2.1544313298030657212, 2.6751554864511496201, -2.6751554864511496201, 2.5030729974835913049, -2.3461399387469853167, 2.2466004479931503067, -2.1928988061171960523}},
};
inline const std::vector<OrderValue> i22_subleading = {{1, -3.194528049465325113615}, {2, 3.102291771882328900482}, {3, -3.040096719662259392402}, {4, 2.995034881617869334823}, {5, -2.960768453266510433821}};

inline const std::map<std::string, double> special_real = {
    {"gamma_zero_1", 14.13472514173469379},
    {"gamma_zero_100", 236.5242296658162058},
    {"gamma_zero_2", 21.022039638771554993},
    {"gram_0", 17.845599540410860817},
    {"gram_1", 23.170282701246309279},
    {"gram_100", 238.58259051450292333},
    {"gram_2", 27.670182217816337961},
    {"gram_5", 38.999209964026074817},
    {"lambda_1", 2.4757266226375599},
    {"lambda_2", 10.212074845235794},
    {"theta_1.5", -2.1981908573794103853},
    {"theta_10", -3.0670743962898952917},
    {"theta_17.845599", -2.8202663809756028802e-7},
    {"theta_5", -3.4596203753634625332},
    {"theta_50", 26.461366070161409647},
    {"theta_500", 843.79010058818922952},
    {"theta_5000", 14197.897617602197810},
    {"theta_9.5", -3.1767846988547827074},
    {"theta_99999", 433747.18970747151141},
    {"theta_deriv_100", 1.3836444764195793532},
    {"theta_deriv_3", -0.37212202987019874691},
};
inline const std::map<std::string, std::complex<double>> special_cplx = {
    {"chi_0.3_20", {-0.90601672215640709251, -0.87643434712549316854}},
    {"chi_0.5_100", {0.99988536418961387744, -0.015141283941701319162}},
    {"chi_0.5_5000", {-0.48820843239387113808, -0.87272706302687723767}},
    {"chi_0.6_50", {-0.71917206417093150674, -0.37847951097419314662}},
    {"chilogd_0.3_20", {-1.1578010236354762683, -0.010001751429013452521}},
    {"chilogd_0.5_100", {-2.7672889528391587065, 1.6501690715889045827e-41}},
    {"chilogd_0.5_5000", {-6.6793161233402252648, 0.0}},
    {"chilogd_0.6_50", {-2.0741312713812664681, 0.0020000640088091704826}},
    {"digamma_-0.75_1", {0.46317279488182026119, 2.4821070143037957102}},
    {"digamma_0.25_0.9", {-0.13008801795924172428, 1.8775593225267313440}},
    {"digamma_0.25_5", {1.6090205127143304554, 1.6209229399442998332}},
    {"digamma_2_400", {5.9914713179025785861, 1.5670463424197989636}},
    {"loggamma_-0.75_1", {-0.86550985497318393432, -3.5954784685549135219}},
    {"loggamma_0.25_0.9", {-0.45645263991257374986, -1.3739624796267910195}},
    {"loggamma_0.25_5", {-7.3370880842091811277, 2.6565750329571055790}},
    {"loggamma_2_400", {-618.41239223910176755, 1998.9393050052167173}},
    {"trigamma_-0.75_1", {-0.49396724821387946366, -0.44570377273614686824}},
    {"trigamma_0.25_0.9", {-0.39847400367757510696, -1.2131320466353580652}},
    {"trigamma_0.25_5", {-0.010076634743093015627, -0.20016725468125464612}},
    {"trigamma_2_400", {9.3748828137206924439e-6, -0.0024999661462206994484}},
    {"zeta_-0.5_33.3", {-4.1503219662850990625, -0.35552418287909884566}},
    {"zeta_0.3_20", {0.26899441575398692021, -1.2884234180483037915}},
    {"zeta_0.5_1000.25", {1.7162948782926263679, 1.1046029153847497578}},
    {"zeta_0.5_14.134725141734693", {9.8569884745557532464e-17, -6.1916240825872266291e-16}},
    {"zeta_0.5_50", {-0.081712108320979975048, 0.33079219403866129559}},
    {"zeta_0.7_9999.5", {1.1659307850893362475, -1.7545994722760330773}},
    {"zeta_1.5_120", {1.2214669839786887101, -0.33057922926801111316}},
    {"zeta_2_150", {0.76675716466875393895, -0.068043943845907803556}},
    {"zetap_-0.5_33.3", {7.9851367428056723080, 2.6861434719472110230}},
    {"zetap_0.3_20", {0.90154032427763363372, 1.2454866466638546176}},
    {"zetap_0.5_1000.25", {-2.5603050421521175031, -5.5824325748431529297}},
    {"zetap_0.5_14.134725141734693", {0.78329651186703074702, 0.12469982974817157507}},
    {"zetap_0.5_50", {1.6157796138563030642, 0.035143506417492648250}},
    {"zetap_0.7_9999.5", {-0.80833627964679766616, 4.9051946277429280612}},
    {"zetap_1.5_120", {-0.36224823733806042684, 0.24507818241439423699}},
    {"zetap_2_150", {0.18570535364089470431, 0.10749403584420346507}},
    {"zetapp_-0.5_33.3", {-12.722545561935251392, -6.4754369640237871553}},
    {"zetapp_0.3_20", {-1.0415587176485805471, -1.3483675284597403994}},
    {"zetapp_0.5_1000.25", {9.4054505562727987721, 26.003599438001298513}},
    {"zetapp_0.5_14.134725141734693", {-0.61440979457722893293, -0.22978364311243464700}},
    {"zetapp_0.5_50", {-3.1544714959509999717, -0.88405977609848326900}},
    {"zetapp_0.7_9999.5", {3.3107752057445653587, -23.811451278083034879}},
    {"zetapp_1.5_120", {0.75585715964375590087, -0.26541338167679348097}},
    {"zetapp_2_150", {-0.19007584726942352598, -0.12820302366098235650}},
};

} // namespace golden
