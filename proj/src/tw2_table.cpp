// Generated by tools/gen_tw2_table.py. Do not edit.
// Tracy-Widom (beta = 2) quantiles, knots uniform in probit space.

#include "jamsim/tw2_table.hpp"

namespace jamsim::detail {

const std::array<Tw2Knot, 241> kTw2Table = {{
    {1e-06, -5.446968778585404},
    {1.215622339164429e-06, -5.4205995456837535},
    {1.4755041540270923e-06, -5.394179758954855},
    {1.7882392820480012e-06, -5.367709094275829},
    {2.1639867639281036e-06, -5.341187224611843},
    {2.6147350964633837e-06, -5.3146138199925215},
    {3.154607111968493e-06, -5.287988547488455},
    {3.8002110057314994e-06, -5.2613110711877},
    {4.571043658518377e-06, -5.23458105217233},
    {5.4899530769943815e-06, -5.207798148495699},
    {6.583667501726448e-06, -5.180962015159191},
    {7.883399510178019e-06, -5.154072304090079},
    {9.425534270019764e-06, -5.127128664118946},
    {1.1252411974450985e-05, -5.100130740957693},
    {1.3413215413273243e-05, -5.073078177177767},
    {1.5964974597176394e-05, -5.04597061218908},
    {1.897370135268693e-05, -5.018807682218611},
    {2.2515667834531807e-05, -4.99158902029008},
    {2.667884395211036e-05, -4.964314256203801},
    {3.156450976676516e-05, -4.936983016516895},
    {3.7289059973965195e-05, -4.909594924524157},
    {4.3986018624534676e-05, -4.882149600239535},
    {5.1808283244481685e-05, -4.854646660377813},
    {6.0930618464157655e-05, -4.827085718337392},
    {7.155242014220455e-05, -4.7994663841833525},
    {8.390077174318568e-05, -4.771788264631339},
    {9.823381537246572e-05, -4.744050963032299},
    {0.00011484446035771901, -4.716254079357658},
    {0.00013406445256072377, -4.688397210185721},
    {0.0001562688276707994, -4.66047994868863},
    {0.00018188077153503393, -4.632501884620353},
    {0.00021137691008113485, -4.604462604305672},
    {0.000245293050545449, -4.576361690630142},
    {0.0002842303944894654, -4.54819872303109},
    {0.00032886224143031614, -4.519973277489741},
    {0.0003799411997818106, -4.491684926524605},
    {0.0004383069191604484, -4.463333239186001},
    {0.0005048943549152534, -4.4349177810519045},
    {0.0005807425719531756, -4.406438114225172},
    {0.0006670040905186659, -4.377893797332168},
    {0.0007649547715167212, -4.349284385522897},
    {0.0008760042332187144, -4.320609430472636},
    {0.0010017067847421276, -4.291868480385231},
    {0.0011437728545392006, -4.263061079998099},
    {0.0013040808842651988, -4.2341867705889245},
    {0.001484689649835027, -4.205245089984246},
    {0.0016878509622391905, -4.176235572569959},
    {0.0019160226908119797, -4.147157749303691},
    {0.0021718820411755716, -4.118011147729527},
    {0.002458339009087919, -4.088795291994437},
    {0.002778549919980197, -4.059509702867393},
    {0.003135930952178556, -4.030153897760475},
    {0.0035341715297786246, -4.000727390752498},
    {0.003977247459011587, -3.971229692615126},
    {0.004469433669855551, -3.9416603108415154},
    {0.005015316412771139, -3.912018749677621},
    {0.005619804748956117, -3.8823045101562768},
    {0.006288141161617017, -3.852517090134089},
    {0.007025911105653924, -3.822655984331244},
    {0.007839051304068832, -3.792720684374358},
    {0.008733856591566372, -3.7627106788423994},
    {0.009716985099453049, -3.7326254533158925},
    {0.01079546157129443, -3.702464490429317},
    {0.011976678596095526, -3.672227269927063},
    {0.013268395545259095, -3.6419132687225053},
    {0.014678735001471504, -3.611521960961149},
    {0.01621617647217451, -3.5810528180870755},
    {0.01788954718759384, -3.550505308913239},
    {0.019708009793577088, -3.51987889969572},
    {0.02168104676288278, -3.4891730542116512},
    {0.023818441365164072, -3.4583872338414965},
    {0.026130255055770064, -3.427520897655191},
    {0.028626801166672444, -3.3965735025025356},
    {0.03131861480928745, -3.365544503107914},
    {0.03421641892863938, -3.3344333521692096},
    {0.03733108648106731, -3.303239500461378},
    {0.04067359874334047, -3.2719623969442138},
    {0.04425499979937516, -3.2406014888748915},
    {0.04808634729144841, -3.2091562219250145},
    {0.052178659565526746, -3.1776260403023513},
    {0.05654285938466646, -3.146010386877287},
    {0.061189714429935295, -3.1143087033140437},
    {0.06612977485444661, -3.0825204302066798},
    {0.07137330820232904, -3.050645007219935},
    {0.07693023205019167, -3.0186818732349288},
    {0.08281004477325626, -2.9866304664997076},
    {0.08902175488117403, -2.9544902247846987},
    {0.09557380940895893, -2.9222605855430124},
    {0.10247402188578597, -2.8899409860756275},
    {0.10972950043796853, -2.8575308637014185},
    {0.11734657661158443, -2.8250296559319907},
    {0.12533073552437102, -2.7924368006513034},
    {0.13368654797505536, -2.759751736299986},
    {0.14241760515072283, -2.726973902064384},
    {0.15152645657867098, -2.694102738070089},
    {0.1610145519680774, -2.661137685580042},
    {0.17088218757838913, -2.6280781871969956},
    {0.1811284577354363, -2.594923687070268},
    {0.1917512120927234, -2.561673631106619},
    {0.2027470192041776, -2.528327467185255},
    {0.21411113693589806, -2.4948846453764317},
    {0.22583749019838106, -2.4613446181640457},
    {0.2379186564275944, -2.4277068406715134},
    {0.25034585918358454, -2.393970770891026},
    {0.2631089701695465, -2.360135869915862},
    {0.27619651990312577, -2.3262016021755723},
    {0.28959571719589117, -2.2921674356737545},
    {0.3032924775172372, -2.258032842228172},
    {0.31727146023637076, -2.2237972977129563},
    {0.33151611465146136, -2.189460282302584},
    {0.3460087346295322, -2.1550212807173184},
    {0.36073052159528324, -2.1204797824698405},
    {0.3756616555228704, -2.0858352821126753},
    {0.3907813735027827, -2.051087279486106},
    {0.40606805537745644, -2.016235279966297},
    {0.42149931586516864, -1.9812787947129675},
    {0.43705210252307186, -1.9462173409167192},
    {0.4527027988378933, -1.9110504420451446},
    {0.4684273316776862, -1.8757776280876115},
    {0.48420128229083875, -1.840398435798233},
    {0.5, -1.804912408936574},
    {0.5157987177091612, -1.7693190985057468},
    {0.5315726683223139, -1.7336180629874058},
    {0.5472972011621063, -1.6978088685732566},
    {0.5629478974769277, -1.6618910893926113},
    {0.578500684134831, -1.6258643077356747},
    {0.5939319446225433, -1.5897281142718078},
    {0.609218626497217, -1.5534821082628807},
    {0.6243383444771292, -1.5171258977707542},
    {0.6392694784047164, -1.4806590998587934},
    {0.6539912653704675, -1.4440813407868907},
    {0.6684838853485383, -1.407392256199622},
    {0.6827285397636289, -1.3705914913071366},
    {0.6967075224827625, -1.3336787010584072},
    {0.7104042828041085, -1.2966535503064396},
    {0.7238034800968739, -1.2595157139652349},
    {0.7368910298304532, -1.22226487715788},
    {0.7496541408164151, -1.1849007353557968},
    {0.7620813435724054, -1.1474229945085983},
    {0.7741625098016189, -1.1098313711643946},
    {0.7858888630641019, -1.0721255925803037},
    {0.7972529807958223, -1.0343053968227982},
    {0.8082487879072766, -0.9963705328579922},
    {0.8188715422645636, -0.9583207606312791},
    {0.8291178124216108, -0.9201558511365096},
    {0.8389854480319225, -0.8818755864744433},
    {0.8484735434213289, -0.8434797599004294},
    {0.8575823948492771, -0.8049681758610497},
    {0.8663134520249445, -0.7663406500201331},
    {0.8746692644756289, -0.7275970092736364},
    {0.8826534233884155, -0.6887370917537111},
    {0.8902704995620313, -0.64976074682192},
    {0.8975259781142139, -0.6106678350517144},
    {0.9044261905910409, -0.5714582282002209},
    {0.9109782451188259, -0.5321318091695049},
    {0.9171899552267436, -0.49268847195750337},
    {0.9230697679498082, -0.4531281215988147},
    {0.9286266917976708, -0.413450674095431},
    {0.9338702251455533, -0.37365605633784865},
    {0.9388102855700645, -0.3337442060168162},
    {0.9434571406153336, -0.2937150715255522},
    {0.9478213404344732, -0.2535686118536011},
    {0.9519136527085515, -0.213304796471757},
    {0.9557450002006248, -0.17292360520895725},
    {0.9593264012566595, -0.1324250281213727},
    {0.9626689135189327, -0.09180906535388071},
    {0.9657835810713605, -0.05107572699462076},
    {0.9686813851907125, -0.010225032922758353},
    {0.9713731988333275, 0.030742987350054807},
    {0.9738697449442298, 0.07182829484389684},
    {0.9761815586348359, 0.11303084128059383},
    {0.9783189532371172, 0.15435056925837465},
    {0.9802919902064229, 0.19578741243147402},
    {0.9821104528124062, 0.237341295693701},
    {0.9837838235278255, 0.2790121353658778},
    {0.9853212649985285, 0.32079983938667983},
    {0.9867316044547408, 0.36270430750617627},
    {0.9880233214039045, 0.40472543148214657},
    {0.9892045384287056, 0.4468630952784765},
    {0.9902830149005469, 0.48911717526505494},
    {0.9912661434084337, 0.5314875404193935},
    {0.9921609486959312, 0.5739740525288809},
    {0.992974088894346, 0.6165765663937764},
    {0.993711858838383, 0.659294930030487},
    {0.9943801952510439, 0.7021289848748661},
    {0.9949846835872289, 0.7450785659845967},
    {0.9955305663301445, 0.7881435022419677},
    {0.9960227525409884, 0.8313236165539858},
    {0.9964658284702214, 0.8746187260532533},
    {0.9968640690478214, 0.9180286422952154},
    {0.9972214500800198, 0.9615531714552218},
    {0.9975416609909121, 1.0051921145229663},
    {0.9978281179588244, 1.0489452674941782},
    {0.998083977309188, 1.0928124215610757},
    {0.9983121490377608, 1.1367933632992802},
    {0.9985153103501649, 1.1808878748519236},
    {0.9986959191157347, 1.225095734111642},
    {0.9988562271454609, 1.2694167148978501},
    {0.9989982932152579, 1.3138505871335913},
    {0.9991239957667812, 1.3583971170160876},
    {0.9992350452284833, 1.4030560671857977},
    {0.9993329959094813, 1.4478271968902865},
    {0.9994192574280468, 1.4927102621483292},
    {0.9994951056450847, 1.5377050159034034},
    {0.9995616930808395, 1.5828112081839822},
    {0.9996200588002182, 1.6280285862455748},
    {0.9996711377585696, 1.673356894727442},
    {0.9997157696055106, 1.718795875785446},
    {0.9997547069494546, 1.7643452692378487},
    {0.9997886230899189, 1.8100048127010906},
    {0.999818119228465, 1.855774241717372},
    {0.9998437311723292, 1.9016532898853773},
    {0.9998659355474393, 1.9476416889844406},
    {0.9998851555396423, 1.9937391690920672},
    {0.9999017661846276, 2.0399454587070114},
    {0.9999160992282569, 2.0862602848596117},
    {0.9999284475798578, 2.132683373210955},
    {0.9999390693815359, 2.179214448193167},
    {0.9999481917167555, 2.2258532330682264},
    {0.9999560139813755, 2.2725994500400453},
    {0.9999627109400261, 2.3194528203956564},
    {0.9999684354902333, 2.366413064523616},
    {0.9999733211560479, 2.4134799020670985},
    {0.9999774843321655, 2.4606530519561427},
    {0.9999810262986473, 2.50793223255234},
    {0.9999840350254028, 2.555317161682467},
    {0.9999865867845867, 2.6028075567385374},
    {0.9999887475880256, 2.650403134725858},
    {0.99999057446573, 2.698103612326426},
    {0.9999921166004898, 2.7459087061101317},
    {0.9999934163324983, 2.793818132361723},
    {0.999994510046923, 2.8418316073431544},
    {0.9999954289563415, 2.8899488472544403},
    {0.9999961997889942, 2.938169568335293},
    {0.999996845392888, 2.986493486907711},
    {0.9999973852649036, 3.0349203192841663},
    {0.9999978360132361, 3.083449782393166},
    {0.9999982117607179, 3.1320815927669585},
    {0.9999985244958459, 3.1808154677807368},
    {0.9999987843776609, 3.2296511249932247},
    {0.999999, 3.2785882819795464},
}};

}  // namespace jamsim::detail
