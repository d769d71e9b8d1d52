#pragma once

// Generated by tests/oracle/make_frozen.py. Do not edit.

namespace frozen {

inline constexpr double kFkLocal6[378] = {
    0.059999999999999998, -0.089999999999999997, 0, -0.059999999999999998,
    -0.089999999999999997, 0, 0, 0.11,
    -0.02, 0.18418125461198254, -0.44816272512873778, -0.026428740631179247,
    0.018100717881332579, -0.45129202479347807, 0.088138247583266979, -0.021838155547806787,
    0.23568766165374883, -0.046938943377247661, 0.36206124237245196, -0.82814149913329582,
    -0.0070679229746806946, 0.11523368721259368, -0.85857047788462015, 0.12114503350038786,
    -0.024584241227211461, 0.29589603310126139, -0.038728521885038919, 0.36261648554456738,
    -0.88225398856197967, 0.11113330456907369, 0.08284869185769575, -0.86459842420420963,
    0.24690224378684175, 0.0706893361411879, 0.46153934007727604, -0.13084388601870228,
    0.092629292976231181, 0.36298911415560625, -0.076932001754986518, -0.032402928533396533,
    0.41592755767158396, -0.11105625680140523, 0.13161555561391325, 0.52522811250421508,
    -0.077629827279390953, 0.20498364494456228, 0.30360455826733146, -0.09274257150211257,
    -0.10920706003793285, 0.48662831812636498, -0.18523528250914534, 0.40880861283412873,
    0.16311584909943397, -0.01325480476310345, -0.33809000184173021, 0.58582117850761073,
    -0.25853859348911518, 0.63385336426615391, 0.05937030345491344, 0.019786406047318288,
    -0.58193914173314487, 0.63845859630905, -0.24220154291644441, 0.059999999999999998,
    -0.089999999999999997, 0, -0.059999999999999998, -0.089999999999999997,
    0, 0, 0.11, -0.02,
    0.1863444824962992, -0.44326145035452047, -0.060360744165085987, 0.029648138574680571,
    -0.4550262345866416, 0.055848539046182893, -0.02491190166622155, 0.23515101786339393,
    -0.046769756874670464, 0.37759185551362529, -0.81689889076713196, -0.045545028323994562,
    0.15215340413943218, -0.85601255569737056, 0.080392992411311842, -0.030628103294140993,
    0.29497555336426723, -0.037370289280507438, 0.38351804839515669, -0.88261914161337585,
    0.066462689564719069, 0.12149759537900945, -0.87415303744087614, 0.20541756724105453,
    0.050890548741757649, 0.46500398773236223, -0.13455588943086144, 0.080783703477512986,
    0.36873165595222712, -0.080352223193606048, -0.048407643401273487, 0.41332257060015487,
    -0.11070426138721519, 0.10573624860993884, 0.53180464089131008, -0.078612865348252681,
    0.1985562765472364, 0.32001266599207828, -0.092845463357774244, -0.128945493428057,
    0.48121975536116324, -0.1835302664581569, 0.40286974431273181, 0.18296770272526477,
    -0.008734317052212448, -0.35985658403302423, 0.5740907816089954, -0.25873027124073072,
    0.62700298032566115, 0.078472313321705095, 0.027940007860061095, -0.60458035254423226,
    0.62212649272107157, -0.24132775465174555, 0.059999999999999998, -0.089999999999999997,
    0, -0.059999999999999998, -0.089999999999999997, 0,
    0, 0.11, -0.02, 0.1865987593069427,
    -0.43819501945847561, -0.084456986485752422, 0.040512497420655491, -0.4559502354422601,
    0.0194335545389199, -0.028264730598822264, 0.23507616305577206, -0.043602085488827526,
    0.39017911210356626, -0.80528409723711203, -0.07029192627294345, 0.1901212202410289,
    -0.84808616862271768, 0.035138329760117465, -0.037375949210148453, 0.29426995933085004,
    -0.032968169090755409, 0.40169855913997971, -0.87875505128968645, 0.036335093054147241,
    0.16304481318571948, -0.88069507581696804, 0.15803473879053614, 0.025677970946164287,
    0.47200304592189712, -0.13010288525207797, 0.065664468736484766, 0.37810324496281184,
    -0.078296443815622757, -0.067863471728009828, 0.41145875450659397, -0.10394208863857544,
    0.074013101126264802, 0.54251140326293257, -0.072724433412196643, 0.18863364572341237,
    0.34376423150068341, -0.08826708399594356, -0.15346043282987515, 0.47720284685774017,
    -0.17286867691225766, 0.3971426583698705, 0.21210674529879139, -0.0058638196661989217,
    -0.38799234972431385, 0.5603476398460453, -0.24824588405574366, 0.62274255180280702,
    0.11006656661219857, 0.028668629083576029, -0.63447461873383271, 0.597909748383469,
    -0.22992706678655325, 0.059999999999999998, -0.089999999999999997, 0,
    -0.059999999999999998, -0.089999999999999997, 0, 0,
    0.11, -0.02, 0.18562864952251992, -0.43506051614379093,
    -0.097727593942184346, 0.049876291086661181, -0.45336610901706753, -0.017095949076779814,
    -0.031829025172310073, 0.23520947110082902, -0.03759265480907048, 0.40072673250122748,
    -0.79539842797618243, -0.080715715881352068, 0.22734802347349131, -0.83394880576779795,
    -0.0093116612121841458, -0.044841954706880655, 0.29341362121178904, -0.025636879017047129,
    0.41784886004472904, -0.87253791489178123, 0.022513796888893128, 0.20648147982583243,
    -0.88151477562323854, 0.1098607595398995, -0.005235439537024357, 0.480870136887664,
    -0.11669388691188393, 0.046656232811064624, 0.39010181382643527, -0.070128171309404547,
    -0.090523959117496472, 0.40914184988847652, -0.09059941868711241, 0.03591180448810527,
    0.55550184700436533, -0.058927009255279612, 0.17328920322654182, 0.37293752247375672,
    -0.078463512101072552, -0.18269677657458955, 0.47279158195800214, -0.15267101709974384,
    0.38990917863806335, 0.24957789682425702, -0.004583954628608583, -0.42192101667273196,
    0.54409443918295264, -0.22538735296057094, 0.61931309042659777, 0.15351560153825711,
    0.020830228035874185, -0.6701196788071534, 0.56651726889247012, -0.20552178419193828,
    0.059999999999999998, -0.089999999999999997, 0, -0.059999999999999998,
    -0.089999999999999997, 0, 0, 0.11,
    -0.02, 0.18384289984083063, -0.43497594863724931, -0.10027228441021965,
    0.057351888808829202, -0.44799526346192964, -0.049678219893870612, -0.035452666720859824,
    0.2351406594722803, -0.029106248910633847, 0.40988524977935148, -0.78824912566381811,
    -0.077846441553686974, 0.26223423939840806, -0.81462711696799639, -0.04760303036157424,
    -0.052890712893680844, 0.2918707892793555, -0.015779324368679078, 0.43231588919422387,
    -0.86516722277585512, 0.024527738550982059, 0.25040735303820255, -0.87548449025320152,
    0.066662033747487526, -0.041450755638209179, 0.4887135039877154, -0.09402300171219477,
    0.023503209906269612, 0.40273851465629645, -0.055431764759888459, -0.11560849516734574,
    0.4046087160547569, -0.071066209369168951, -0.0087438978628773811, 0.56771823525103482,
    -0.036677436125352014, 0.15134059262417862, 0.40460080893004413, -0.062789443733099207,
    -0.21582202897153446, 0.46493075526102989, -0.12320543863537103, 0.37900087992317366,
    0.29402910102648094, -0.0032521361165453733, -0.46048253654390281, 0.52310998648493501,
    -0.18920856802047264, 0.61362880048172674, 0.20827972377619156, 0.0065857089501789833,
    -0.70937787257029183, 0.52744421202049285, -0.16613637277776086, 0.059999999999999998,
    -0.089999999999999997, 0, -0.059999999999999998, -0.089999999999999997,
    0, 0, 0.11, -0.02,
    0.18127427740855401, -0.43801572460778315, -0.092615360846636574, 0.063052441639928666,
    -0.44155493873347507, -0.075280951498732873, -0.038914897197682589, 0.23443558752262397,
    -0.018810321895138121, 0.41779260907577775, -0.78386060940951818, -0.063453837535469126,
    0.29376431298007011, -0.79251291450889205, -0.076010103301771798, -0.061208146611733065,
    0.28912169314513136, -0.0042349700157870672, 0.44478805585658532, -0.85700616029810239,
    0.040570074322863345, 0.29325733690056593, -0.86322933331175689, 0.0330721183796399,
    -0.081436532656272764, 0.49190663375673216, -0.063133868640316643, -0.0032782717672328321,
    0.41329777117476707, -0.034639430966088069, -0.14166985680013491, 0.39596653282115013,
    -0.04678016278963032, -0.059131541635233792, 0.57520456967559563, -0.0068849464532357435,
    0.12275852045650898, 0.43504743003376833, -0.041095385230672909, -0.25067929181499204,
    0.45007794435264475, -0.086641148976764254, 0.3622560698240338, 0.34283375409068073,
    0.00058868625968518801, -0.50117755100211547, 0.49352000694899562, -0.14107835446708636,
    0.60182567090654437, 0.27210828490824435, -0.0096247483286882162, -0.74902367417043203,
    0.4784589245833496, -0.11200150751954178};

inline constexpr double kIntegrateYaw12[12] = {
    0, 0, 0.014776010333066978, 0.043008134002818749,
    0.082174479484192917, 0.12877643378255424, 0.17865118311275696, 0.22734356465666672,
    0.27050403298911041, 0.30427719201666797, 0.32564618602835949, 0.33270218643135285};

inline constexpr double kIntegrateX12[12] = {
    0, 0.01, 0.019800665778412416, 0.02951570009585015,
    0.039265706471938153, 0.049044909464437493, 0.058640099733183515, 0.0676624638076809,
    0.075684791885424707, 0.082408776808415435, 0.08776487547572985, 0.091885848324086222};

inline constexpr double kIntegrateZ12[12] = {
    0, 0.029999999999999999, 0.062397127693021012, 0.096464657315486646,
    0.13106492704823294, 0.16492296872262585, 0.19694828445552848, 0.22652126426083366,
    0.25365744654009748, 0.27899815074885781, 0.30363763895830154, 0.32884967008342991};

inline constexpr double kGlobal6[396] = {
    0, 0.90000000000000002, 0, 0.059999999999999998,
    0.81000000000000005, 0, -0.059999999999999998, 0.81000000000000005,
    0, 0, 1.01, -0.02,
    0.18418125461198254, 0.45183727487126224, -0.026428740631179247, 0.018100717881332579,
    0.44870797520652195, 0.088138247583266979, -0.021838155547806787, 1.1356876616537488,
    -0.046938943377247661, 0.36206124237245196, 0.0718585008667042, -0.0070679229746806946,
    0.11523368721259368, 0.041429522115379869, 0.12114503350038786, -0.024584241227211461,
    1.1958960331012614, -0.038728521885038919, 0.36261648554456738, 0.017746011438020348,
    0.11113330456907369, 0.08284869185769575, 0.035401575795790396, 0.24690224378684175,
    0.0706893361411879, 1.3615393400772762, -0.13084388601870228, 0.092629292976231181,
    1.2629891141556062, -0.076932001754986518, -0.032402928533396533, 1.3159275576715839,
    -0.11105625680140523, 0.13161555561391325, 1.425228112504215, -0.077629827279390953,
    0.20498364494456228, 1.2036045582673314, -0.09274257150211257, -0.10920706003793285,
    1.386628318126365, -0.18523528250914534, 0.40880861283412873, 1.0631158490994339,
    -0.01325480476310345, -0.33809000184173021, 1.4858211785076108, -0.25853859348911518,
    0.63385336426615391, 0.95937030345491348, 0.019786406047318288, -0.58193914173314487,
    1.53845859630905, -0.24220154291644441, 0.01, 0.90778836684617303,
    0.029999999999999999, 0.069999999999999993, 0.81778836684617306, 0.029999999999999999,
    -0.049999999999999996, 0.81778836684617306, 0.029999999999999999, 0.01,
    1.0177883668461731, 0.0099999999999999985, 0.19634448249629921, 0.46452691649165256,
    -0.030360744165085989, 0.039648138574680573, 0.45276213225953144, 0.085848539046182892,
    -0.01491190166622155, 1.142939384709567, -0.016769756874670465, 0.38759185551362529,
    0.090889476079041076, -0.015545028323994563, 0.16215340413943219, 0.051775811148802475,
    0.11039299241131184, -0.020628103294140991, 1.2027639202104403, -0.0073702892805074388,
    0.39351804839515669, 0.025169225232797188, 0.096462689564719067, 0.13149759537900946,
    0.033635329405296899, 0.23541756724105453, 0.060890548741757651, 1.3727923545785352,
    -0.10455588943086144, 0.090783703477512981, 1.2765200227984002, -0.050352223193606049,
    -0.038407643401273485, 1.3211109374463279, -0.08070426138721519, 0.11573624860993884,
    1.439593007737483, -0.048612865348252682, 0.20855627654723641, 1.2278010328382514,
    -0.062845463357774245, -0.11894549342805701, 1.3890081222073363, -0.1535302664581569,
    0.41286974431273182, 1.0907560695714378, 0.021265682947787551, -0.34985658403302422,
    1.4818791484551683, -0.22873027124073073, 0.63700298032566116, 0.98626068016787816,
    0.057940007860061093, -0.59458035254423225, 1.5299148595672447, -0.21132775465174555,
    0.019800665778412416, 0.91434712181799049, 0.062397127693021012, 0.079794115983141164,
    0.82434712181799052, 0.061510599333219312, -0.040192784426316325, 0.82434712181799052,
    0.063283656052822712, 0.019505156325145181, 1.0243471218179905, 0.042399310958111433,
    0.20513116346244945, 0.47615210235951488, -0.02480772406037654, 0.060595880676842462,
    0.45839688637573039, 0.081229969503717123, -0.0091052207726352551, 1.1494232848737624,
    0.01921742670404953, 0.40889858822515451, 0.10906302458087846, -0.013652206089184923,
    0.21042031719909313, 0.066260953195272809, 0.094722490746307147, -0.018058323632640993,
    1.2086170811488406, 0.029984804830720892, 0.42199224237048233, 0.035592070528304043,
    0.09279296821067258, 0.18516271842455287, 0.033652046001022451, 0.21800555071701488,
    0.043553502009232165, 1.3863501677398875, -0.068070959262445926, 0.084301099402547347,
    1.2924503667808023, -0.016860992590747512, -0.049591191241412494, 1.3258058763245844,
    -0.040530899417518917, 0.092731149515840702, 1.4568585250809232, -0.01141294543576292,
    0.20710953175248878, 1.2581113533186739, -0.028647472056543014, -0.13619723122124339,
    1.3915499686757307, -0.10818522788167469, 0.4168133300560054, 1.1264538671167819,
    0.050665977648261952, -0.37181727971193396, 1.4746947616640358, -0.18008888667715262,
    0.64289882952285637, 1.0244136884301891, 0.081861311665269137, -0.6180019727310001,
    1.5122568702014596, -0.15813017712192079, 0.02951570009585015, 0.9186407817193446,
    0.096464657315486646, 0.089460217661082087, 0.82864078171934463, 0.093884964723025488,
    -0.030428817469381791, 0.82864078171934463, 0.099044349907947804, 0.02865580256502976,
    1.0286407817193446, 0.076483151460409335, 0.21077091162487138, 0.48358026557555367,
    -0.0091536480811289928, 0.078610831994825492, 0.46527467270227707, 0.077240092009102729,
    -0.0039001840986108462, 1.1538502528201735, 0.060275249714424009, 0.42640151544457527,
    0.12324235374316217, -0.0014056165490893974, 0.25625313948043155, 0.08469197595154665,
    0.077386806462811417, -0.016387043378817221, 1.2120544029311335, 0.07277945921271517,
    0.44794615018961442, 0.046102866827563371, 0.10099227538282982, 0.24052969479421568,
    0.037126006096106057, 0.19734618208185514, 0.019267862546834248, 1.3995109186070085,
    -0.019896224837057955, 0.073113637482861746, 1.3087425955457799, 0.024395355064669264,
    -0.064819861681842131, 1.3277826316078212, 0.0098410830135908095, 0.062860737190261251,
    1.47414262872371, 0.036048114692327098, 0.19927113252473114, 1.2915783041931013,
    0.010623153093994309, -0.15957620697719088, 1.3914323636773467, -0.048210158435203709,
    0.41886724032776596, 1.1682186785436017, 0.075120844505185275, -0.40170566456991508,
    1.4627352209022972, -0.11057383630470916, 0.64915170030282832, 1.0721563832576018,
    0.090648333625428679, -0.64882069792635544, 1.4851580506118147, -0.080055366535349781,
    0.039265706471938153, 0.9199914720608301, 0.13106492704823294, 0.099063241089466153,
    0.82999147206083013, 0.12614000535692241, -0.020531828145589841, 0.82999147206083013,
    0.13598984873954348, 0.037624065908167977, 1.0299914720608301, 0.11113241550905695,
    0.21425769012009904, 0.48501552342358079, 0.016040805657928633, 0.092346376700030874,
    0.47199620859890046, 0.076846783130347471, 0.0015435721029887842, 1.1551321315331105,
    0.10496692172370548, 0.44137803621020133, 0.13174234639701199, 0.019836959694157455,
    0.29670770333073149, 0.10536435509283371, 0.062097811218849441, -0.014741729729114299,
    1.2118622613401855, 0.11968022578192755, 0.47213606549573028, 0.05482424928497498,
    0.12002453362991949, 0.29429983410152732, 0.044506981807628576, 0.17694807148237807,
    -0.0097627754582788814, 1.4087049760485455, 0.040761560812149072, 0.058139654927597928,
    1.3227299867171265, 0.073891021374517779, -0.081785935326247033, 1.3246001881155869,
    0.069727904892567222, 0.02754075587355579, 1.4877097073118648, 0.0952289729792926,
    0.18494172702285583, 1.3245922809908741, 0.056065018670967373, -0.18594099995928232,
    1.38492222732186, 0.025990345549536928, 0.41672073516487279, 1.214020573087311,
    0.096714604105408775, -0.4351935902043445, 1.4431014585457651, -0.019707830675806254,
    0.65136443213826534, 1.1282711958370217, 0.087260516531965843, -0.68135523549371579,
    1.4474356840813229, 0.023716343207373883, 0.049044909464437493, 0.9181859485365137,
    0.16492296872262585, 0.10854809550796352, 0.82818594853651373, 0.157217720467733,
    -0.01045827657908853, 0.82818594853651373, 0.17262821697751871, 0.04647649337947321,
    1.0281859485365137, 0.14508857337478384, 0.21692445456455611, 0.48017022392873054,
    0.049795096112543583, 0.10190762188505345, 0.47663100980303863, 0.08216811574803326,
    0.0080366000015227798, 1.1526215360591376, 0.15126588306357192, 0.45522930570626607,
    0.13432533912699551, 0.048341280855343116, 0.33061550700412945, 0.12567303402762164,
    0.051816797424418456, -0.012200277711246453, 1.2073076416816451, 0.16858346465807836,
    0.49536005833026686, 0.061179788238411303, 0.14803707354007378, 0.34412115544199912,
    0.054956615224756811, 0.16006089921278613, -0.039825011944751111, 1.4100925822932457,
    0.11277000821899212, 0.041345358966623731, 1.3314837197112808, 0.13099135859923453,
    -0.097459434096171194, 1.3141524813576639, 0.13672351351033174, -0.010481179612323289,
    1.4933905182121094, 0.16568875136074931, 0.16550945839475179, 1.3532333785702821,
    0.10840311491542841, -0.21068522553692828, 1.3682638928891584, 0.11119166487605896,
    0.40837701432962342, 1.2610197026271943, 0.11898556469254809, -0.46610017058020092,
    1.4117059554855094, 0.089374400017308772, 0.64465130590541375, 1.1902942334447579,
    0.078090978873852093, -0.70815999812771169, 1.3966448731198633, 0.15003908237570057};

inline constexpr double kVelocity6[396] = {
    0, 0.90000000000000002, 0, 0.059999999999999998,
    -0.089999999999999997, 0, -0.059999999999999998, -0.089999999999999997,
    0, 0, 0.11, -0.02,
    0.18418125461198254, -0.44816272512873778, -0.026428740631179247, 0.018100717881332579,
    -0.45129202479347807, 0.088138247583266979, -0.021838155547806787, 0.23568766165374883,
    -0.046938943377247661, 0.36206124237245196, -0.82814149913329582, -0.0070679229746806946,
    0.11523368721259368, -0.85857047788462015, 0.12114503350038786, -0.024584241227211461,
    0.29589603310126139, -0.038728521885038919, 0.36261648554456738, -0.88225398856197967,
    0.11113330456907369, 0.08284869185769575, -0.86459842420420963, 0.24690224378684175,
    0.0706893361411879, 0.46153934007727604, -0.13084388601870228, 0.092629292976231181,
    0.36298911415560625, -0.076932001754986518, -0.032402928533396533, 0.41592755767158396,
    -0.11105625680140523, 0.13161555561391325, 0.52522811250421508, -0.077629827279390953,
    0.20498364494456228, 0.30360455826733146, -0.09274257150211257, -0.10920706003793285,
    0.48662831812636498, -0.18523528250914534, 0.40880861283412873, 0.16311584909943397,
    -0.01325480476310345, -0.33809000184173021, 0.58582117850761073, -0.25853859348911518,
    0.63385336426615391, 0.05937030345491344, 0.019786406047318288, -0.58193914173314487,
    0.63845859630905, -0.24220154291644441, 0.01, 0.0077883668461730116,
    0.029999999999999999, 0, 0, 0,
    0, 0, 0, 0,
    0, 0, 0.0021632278843166652, 0.0049012747742173124,
    -0.033932003533906741, 0.011547420693347993, -0.0037342097931635232, -0.032289708537084086,
    -0.0030737461184147628, -0.00053664379035489596, 0.00016918650257719686, 0.015530613141173322,
    0.011242608366163864, -0.038477105349313867, 0.0369197169268385, 0.002557922187249595,
    -0.040752041089076013, -0.0060438620669295319, -0.00092047973699416197, 0.0013582326045314813,
    0.020901562850589306, -0.00036515305139617205, -0.044670615004354625, 0.038648903521313699,
    -0.0095546132366665093, -0.041484676545787219, -0.019798787399430251, 0.0034646476550861949,
    -0.0037120034121591594, -0.011845589498718195, 0.0057425417966208703, -0.0034202214386195307,
    -0.016004714867876954, -0.0026049870714290879, 0.00035199541419003721, -0.025879307003974408,
    0.0065765283870949931, -0.0009830380688617274, -0.0064273683973258833, 0.016408107724746823,
    -0.00010289185566167425, -0.019738433390124155, -0.005408562765201741, 0.0017050160509884393,
    -0.0059388685213969117, 0.019851853625830806, 0.0045204877108910024, -0.021766582191294015,
    -0.011730396898615325, -0.00019167775161554879, -0.0068503839404927547, 0.019102009866791655,
    0.008153601812742807, -0.022641210811087387, -0.01633210358797843, 0.0008737882646988604,
    0.0093209130312399014, 0.0065587549718174598, 0.032538400586416591, 0,
    0, 0, 0, 0,
    0, 0, 0, 0,
    0.0002542768106434945, 0.0050664308960448601, -0.024096242320666435, 0.01086435884597492,
    -0.00092400085561850087, -0.036414984507262993, -0.0033528289326007141, -7.4854807621871355e-05,
    0.0031676713858429378, 0.012587256589940976, 0.011614793530019929, -0.024746897948948889,
    0.037967816101596719, 0.0079263870746528742, -0.045254662651194377, -0.0067478459160074597,
    -0.00070559403341718951, 0.004402120189752029, 0.01818051074482302, 0.0038640903236893953,
    -0.030127596510571827, 0.04154721780671003, -0.0065420383760919076, -0.047382828450518388,
    -0.025212577795593362, 0.0069990581895348902, 0.0044530041787834707, -0.01511923474102822,
    0.0093715890105847133, 0.0020557793779832911, -0.019455828326736341, -0.0018638160935608994,
    0.0067621727486397443, -0.031723147483674038, 0.010706762371622491, 0.0058884319360560378,
    -0.0099226308238240246, 0.023751565508605132, 0.0045783793618306839, -0.024514939401818148,
    -0.0040169085034230667, 0.010661589545899242, -0.0057270859428613097, 0.029139042573526619,
    0.0028704973860135263, -0.028135765691289616, -0.013743141762950106, 0.010484387184987065,
    -0.0042604285228541316, 0.031594253290493479, 0.00072862122351493447, -0.029894266189600449,
    -0.024216744337602569, 0.011400687865192299, 0.008241321524632526, 0.0042936599013541077,
    0.034453723832035849, 0, 0, 0,
    0, 0, 0, 0,
    0, 0, -0.00097010978442277351, 0.0031345033146846779,
    -0.013270607456431924, 0.0093637936660056903, 0.0025841264251925677, -0.036529503615699718,
    -0.0035642945734878084, 0.00013330804505695681, 0.0060094306797570454, 0.010547620397661217,
    0.0098856692609295971, -0.010423789608408618, 0.037226803232462413, 0.014137362854919733,
    -0.044449990972301609, -0.0074660054967322018, -0.00085633811906099533, 0.0073312900737082798,
    0.016150300904749337, 0.0062171363979052208, -0.013821296165254113, 0.043436666640112948,
    -0.00081969980627050187, -0.048173979250636642, -0.030913410483188644, 0.0088670909657668773,
    0.013408998340194045, -0.019008235925420142, 0.011998568863623438, 0.0081682725062182104,
    -0.022660487389486644, -0.0023169046181174546, 0.013342669951463035, -0.038101296638159532,
    0.012990443741432767, 0.013797424156917031, -0.015344442496870558, 0.029173290973073307,
    0.0098035718948710077, -0.029236343744714399, -0.0044112648997380322, 0.020197659812513813,
    -0.0072334797318071575, 0.037471151525465624, 0.0012798650375903387, -0.033928666948418118,
    -0.01625320066309266, 0.022858531095172718, -0.003429461376209253, 0.043449034926058533,
    -0.0078384010477018443, -0.035645060073320689, -0.031392479490998881, 0.024405282594614969,
    0.0068770454143873942, 0.0013506903414854943, 0.035283814083528577, 0,
    0, 0, 0, 0,
    0, 0, 0, 0,
    -0.0017857496816892915, 8.4567506541621817e-05, -0.0025446904680353072, 0.0074755977221680203,
    0.0053708455551378931, -0.032582270817090794, -0.0036236415485497511, -6.8811628548715031e-05,
    0.0084864058984366331, 0.009158517278124001, 0.0071493023123643251, 0.0028692743276650945,
    0.034886215924916752, 0.019321688799801562, -0.038291369149390096, -0.0080487581868001895,
    -0.0015428319324335416, 0.0098575546483680512, 0.014467029149494826, 0.0073706921159261141,
    0.0020139416620889306, 0.043925873212370126, 0.0060302853700370251, -0.043198725792411977,
    -0.036215316101184822, 0.0078433671000514016, 0.022670885199689156, -0.023153022904795012,
    0.01263670082986118, 0.014696406549516088, -0.025084536049849268, -0.0045331338337196159,
    0.019533209317943459, -0.044655702350982651, 0.012216388246669485, 0.022249573129927598,
    -0.021948610602363194, 0.031663286456287409, 0.015674068367973346, -0.033125252396944915,
    -0.0078608266969722451, 0.02946557846437281, -0.010908298714889686, 0.044451204202223926,
    0.0013318185120632098, -0.038561519871170846, -0.02098445269801763, 0.036178784940098296,
    -0.0056842899448710238, 0.054764122237934448, -0.014244519085695202, -0.039258193763138438,
    -0.039073056871977263, 0.039385411414177424, 0.0053501519749064854, -0.0018055235243163992,
    0.034833542326884286, 0, 0, 0,
    0, 0, 0, 0,
    0, 0, -0.0025686224322766238, -0.0030397759705338423,
    0.007656923563583079, 0.0057005528310994646, 0.0064403247284545717, -0.025602731604862261,
    -0.0034622304768227655, -0.00070507194965632736, 0.010295927015495726, 0.0079073592964262751,
    0.0043885162542999234, 0.014392604018217847, 0.031530073581662044, 0.022114202459104337,
    -0.028407072940197557, -0.0083174337180522209, -0.0027490961342241382, 0.01154435435289201,
    0.01247216666236145, 0.008161062477752723, 0.016042335771881286, 0.042849983862363383,
    0.012255156941444634, -0.033589915367847625, -0.039985777018063585, 0.0031931297690167559,
    0.030889133071878128, -0.026781481673502444, 0.010559256518470617, 0.02079233379380039,
    -0.026061361632789173, -0.0086421832336067705, 0.024286046579538631, -0.050387643772356411,
    0.0074863344245608143, 0.029792489672116271, -0.028582072167669642, 0.030446621103724203,
    0.021694058502426297, -0.034857262843457582, -0.014852810908385139, 0.03656428965860678,
    -0.016744810099139862, 0.048804653064199788, 0.0038408223762305613, -0.040695014458212664,
    -0.029589979535939392, 0.048130213553386286, -0.011803129575182369, 0.063828561132052791,
    -0.016210457278867198, -0.039645801600140196, -0.048985287437143255, 0.054134865258219075};

inline constexpr double kJitter6At30 = 0.090859681161704592;

inline constexpr double kLossVp8 = 0.38517697411002461;

inline constexpr double kBandEnergy10x3b2[2] = {
    17.947681467801829, 1.7339168766046202};

inline constexpr double kBandEnergy10x3b3[3] = {
    13.874891053822797, 5.1133396322812006, 0.69336765830245062};

inline constexpr double kBandEnergy9x2b2[2] = {
    9.2735186490301444, 0.51126541782561641};

inline constexpr double kSignal10x3SumSq = 19.681598344406449;

inline constexpr double kSoftmax[3] = {
    0.14931886218339122, 0.033317541632161392, 0.81736359618444743};

inline constexpr double kFusion4[4] = {
    0.10000000000000001, 0.20000000000000001, 0.29999999999999999, 0.40000000000000002};

}  // namespace frozen
