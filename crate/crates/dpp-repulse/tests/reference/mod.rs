// generated with mpmath at 40 digits: (nu, x, J_nu(x), Lambda_nu(x), J_nu'(x))
pub const BESSEL: &[(f64, f64, f64, f64, f64)] = &[
    (-0.5, 0.01, 7.97844666907276, 0.9999500004166653, -399.00212057991735),
    (-0.5, 0.5, 0.9902458802434049, 0.8775825618903728, -1.531219670177933),
    (-0.5, 1.0, 0.4310988680183761, 0.5403023058681398, -0.8869461411509911),
    (-0.5, 2.5, -0.40427830223905686, -0.8011436155469337, -0.22114924561455432),
    (-0.5, 5.0, 0.1012177091851084, 0.28366218546322625, 0.33204621387965094),
    (-0.5, 9.9, -0.22548496913747745, -0.8891911526253609, 0.12741207644193486),
    (-0.5, 12.0, 0.19436440383353454, 0.8438539587324921, 0.11549001912954467),
    (-0.5, 17.0, -0.05324835186521795, -0.27516333805159693, 0.1876113776736702),
    (-0.5, 24.9, 0.15558585088177737, 0.9730377990279994, 0.03375534871404894),
    (-0.5, 25.1, 0.15917335852357836, 0.9994640538508954, 0.002042610334935722),
    (-0.5, 40.0, -0.08413865567639542, -0.6669380616522619, -0.09294922919357863),
    (-0.5, 75.0, 0.08492257892204688, 0.9217512697247493, 0.0351608591555556),
    (-0.5, 100.0, 0.06880309146872808, 0.8623188722876839, 0.04005811725890848),
    (-0.5, 150.0, 0.04555409339939689, 0.6992508064783751, 0.04642020891760212),
    (-0.5, 400.0, -0.020956291922457654, -0.525296338642536, 0.03397296634212106),
    (-0.5, 2000.0, -0.006555934432614165, -0.36745954910083134, -0.016591420104427865),
    (0.0, 0.01, 0.9999750001562495, 0.9999750001562495, -0.004999937500260416),
    (0.0, 0.5, 0.9384698072408129, 0.9384698072408129, -0.2422684576748739),
    (0.0, 1.0, 0.7651976865579666, 0.7651976865579666, -0.4400505857449335),
    (0.0, 2.5, -0.048383776468198, -0.048383776468198, -0.49709410246427405),
    (0.0, 5.0, -0.1775967713143383, -0.1775967713143383, 0.32757913759146523),
    (0.0, 9.9, -0.2403411055347603, -0.2403411055347603, -0.06836983228369205),
    (0.0, 12.0, 0.047689310796833535, 0.047689310796833535, 0.2234471044906276),
    (0.0, 17.0, -0.16985425215118355, -0.16985425215118355, 0.09766849275778065),
    (0.0, 24.9, 0.0832459683530155, 0.0832459683530155, 0.13485569953140886),
    (0.0, 25.1, 0.10827567149994945, 0.10827567149994945, 0.11463478413442257),
    (0.0, 40.0, 0.00736689058423729, 0.00736689058423729, -0.126038318037585),
    (0.0, 75.0, 0.03464391380509706, 0.03464391380509706, 0.08513999504482911),
    (0.0, 100.0, 0.019985850304223122, 0.019985850304223122, 0.07714535201411216),
    (0.0, 150.0, -0.0007740903753942912, -0.0007740903753942912, 0.06514516365772736),
    (0.0, 400.0, -0.03882518153078396, -0.03882518153078396, 0.00922205842858635),
    (0.0, 2000.0, 0.007098341833199617, 0.007098341833199617, -0.016370141522854216),
    (0.5, 0.01, 0.07978712627933422, 0.9999833334166665, 3.989090355106049),
    (0.5, 0.5, 0.540973789934528, 0.958851077208406, 0.44927209030887677),
    (0.5, 1.0, 0.6713967071418031, 0.8414709848078965, 0.09540051444747454),
    (0.5, 2.5, 0.3020049060623657, 0.2393888576415826, -0.46467928345153003),
    (0.5, 5.0, -0.3421679847981618, -0.1917848549326277, 0.13543450766492457),
    (0.5, 9.9, -0.11602394668751681, -0.046215746845992056, -0.21962517385022912),
    (0.5, 12.0, -0.12358853595594195, -0.04471440983336958, 0.1995139261650321),
    (0.5, 17.0, -0.18604524967763436, -0.05655279363997393, -0.047776432757052234),
    (0.5, 24.9, -0.036879562587177, -0.009262879756120309, 0.15632640434738332),
    (0.5, 25.1, -0.005213394369269952, -0.001304198379714953, 0.15927721100105385),
    (0.5, 40.0, 0.09400096238953358, 0.018627829011983718, -0.08531366770626458),
    (0.5, 75.0, -0.03572700968170258, -0.005170421805459072, 0.08516075898659156),
    (0.5, 100.0, -0.04040213271625212, -0.005063656411097588, 0.06900510213230934),
    (0.5, 150.0, -0.04657205589560011, -0.004765842864194431, 0.04570933358571555),
    (0.5, 400.0, -0.03394677097721799, -0.002127298399097941, -0.02091385845873613),
    (0.5, 2000.0, 0.016593059088036016, 0.0004650197522080685, -0.006560082697386174),
    (1.0, 0.01, 0.004999937500260416, 0.9999875000520833, 0.49998125013020794),
    (1.0, 0.5, 0.2422684576748739, 0.9690738306994956, 0.4539328918910651),
    (1.0, 1.0, 0.4400505857449335, 0.880101171489867, 0.32514710081303305),
    (1.0, 2.5, 0.49709410246427405, 0.3976752819714192, -0.2472214174539076),
    (1.0, 5.0, -0.32757913759146523, -0.1310316550365861, -0.11208094379604526),
    (1.0, 9.9, 0.06836983228369205, 0.013812087330038796, -0.2472471491997797),
    (1.0, 12.0, -0.2234471044906276, -0.03724118408177127, 0.06630990283771918),
    (1.0, 17.0, -0.09766849275778065, -0.011490410912680077, -0.1641090466948435),
    (1.0, 24.9, -0.13485569953140886, -0.01083178309489228, 0.08866185990046163),
    (1.0, 25.1, -0.11463478413442257, -0.009134245747762754, 0.11284279437383082),
    (1.0, 40.0, 0.126038318037585, 0.00630191590187925, 0.004215932633297665),
    (1.0, 75.0, -0.08513999504482911, -0.0022703998678621096, 0.03577911373902811),
    (1.0, 100.0, -0.07714535201411216, -0.001542907040282243, 0.020757303824364245),
    (1.0, 150.0, -0.06514516365772736, -0.0008686021821030314, -0.0003397892843427755),
    (1.0, 400.0, -0.00922205842858635, -4.611029214293176e-05, -0.03880212638471249),
    (1.0, 2000.0, 0.016370141522854216, 1.6370141522854217e-05, 0.00709015676243819),
    (1.5, 0.01, 0.0002659588606619177, 0.9999900000357143, 0.03989329718004656),
    (1.5, 0.5, 0.0917016996256513, 0.9752221838163995, 0.26586869105757416),
    (1.5, 1.0, 0.240297839123427, 0.9035060368192703, 0.3109499484566626),
    (1.5, 2.5, 0.5250802646640031, 0.4994555871304878, -0.013043252736036206),
    (1.5, 5.0, -0.16965130614474075, -0.05705364484750247, -0.29127259295473956),
    (1.5, 9.9, 0.2137653785629808, 0.02580273663236513, -0.14841264040918056),
    (1.5, 12.0, -0.20466344849652968, -0.018511841011788786, -0.09800560489387573),
    (1.5, 17.0, 0.042304513648886516, 0.002269313609809235, -0.18977800088194788),
    (1.5, 24.9, -0.1570669578129893, -0.004752991139420911, -0.027417697658683668),
    (1.5, 25.1, -0.15938106347852934, -0.004765487463201903, 0.004311370380442957),
    (1.5, 40.0, 0.08648867973613376, 0.0012854360449954605, 0.09075763689942856),
    (1.5, 75.0, -0.08539893905113626, -0.0004943582354827778, -0.034019030900679856),
    (1.5, 100.0, -0.0692071127958906, -0.00026021475860963446, -0.03936402602431376),
    (1.5, 150.0, -0.04586457377203422, -9.386888657900928e-05, -0.046113410157879765),
    (1.5, 400.0, 0.02087142499501461, 9.809419504564464e-06, -0.034025038820949295),
    (1.5, 2000.0, 0.006564230962158183, 2.7594342663977956e-07, 0.016588135914814398),
    (2.0, 0.01, 1.2499895833658854e-05, 0.9999916666927083, 0.0024999583335286453),
    (2.0, 0.5, 0.03060402345868264, 0.9793287506778445, 0.11985236384014332),
    (2.0, 1.0, 0.11490348493190047, 0.9192278794552038, 0.21024361588113255),
    (2.0, 2.5, 0.44605905843961724, 0.5709555948027101, 0.14024685571258025),
    (2.0, 5.0, 0.046565116277752214, 0.01490083720888071, -0.3462051841025661),
    (2.0, 9.9, 0.2541531928647991, 0.02074508257237417, 0.01702575291706597),
    (2.0, 12.0, -0.08493049487860481, -0.004718360826589156, -0.20929202201086014),
    (2.0, 17.0, 0.15836384123850347, 0.004383774151930892, -0.11629953290348694),
    (2.0, 24.9, -0.09407775144790777, -0.001213886891474754, -0.12729925363197853),
    (2.0, 25.1, -0.1174099172477122, -0.001490895919083344, -0.10527941224217459),
    (2.0, 40.0, -0.0010649746823580396, -5.324873411790198e-06, 0.1260915667717029),
    (2.0, 75.0, -0.036914313672959165, -5.250035722376415e-05, -0.08415561334688353),
    (2.0, 100.0, -0.021528757344505364, -1.722300587560429e-05, -0.07671477686722206),
    (2.0, 150.0, -9.451180670874022e-05, -3.360419794088541e-08, -0.06514390350030458),
    (2.0, 400.0, 0.03877907123864102, 1.9389535619320513e-06, -0.009415953784779557),
    (2.0, 2000.0, -0.007081971691676762, -1.4163943383353525e-08, 0.016377223494545894),
    (2.5, 0.01, 5.319192410955081e-07, 0.9999928571626984, 0.00013297905038804072),
    (2.5, 0.5, 0.009236407819379724, 0.9822663964796048, 0.04551966052875268),
    (2.5, 1.0, 0.04949681022847794, 0.9305257801706079, 0.11655581355223216),
    (2.5, 2.5, 0.3280914115344381, 0.6241601507733726, 0.19698885312956504),
    (2.5, 5.0, 0.24037720111131736, 0.08083872605107513, -0.28983990670039944),
    (2.5, 9.9, 0.18080133413084432, 0.011022112561732045, 0.16810847600468679),
    (2.5, 12.0, 0.07242267383180952, 0.0027294342522479996, -0.21975150554482334),
    (2.5, 17.0, 0.1935107520862614, 0.0030530505492967043, 0.01384705010678925),
    (2.5, 24.9, 0.017955832730190337, 0.00010910844865484583, -0.15886975226381161),
    (2.5, 25.1, -0.013836135130155866, -8.241033674434413e-05, -0.1580029623699481),
    (2.5, 40.0, -0.08751431140932354, -0.00016258493406551492, 0.09195832419921648),
    (2.5, 75.0, 0.03231105211965713, 1.2469502853270119e-05, -0.08647597412179149),
    (2.5, 100.0, 0.038325919332375405, 7.20516247873193e-06, -0.07016526077919999),
    (2.5, 150.0, 0.04565476442015942, 3.114649318410281e-06, -0.04662548651237021),
    (2.5, 400.0, 0.034103306664680595, 2.003538579939849e-07, 0.020658279328360354),
    (2.5, 2000.0, -0.01658321274159278, -1.7427892829303577e-09, 0.006584959978085174),
    (3.7, 0.01, 1.9850938810215565e-10, 0.9999946808627286, 7.344826241740041e-08),
    (3.7, 0.5, 0.0003786085608105182, 0.9867748064261366, 0.0027815174265196124),
    (3.7, 1.0, 0.004726869882950518, 0.9479605992996314, 0.01698179160708215),
    (3.7, 2.5, 0.10501875574055598, 0.7097501216555782, 0.12568611405257707),
    (3.7, 5.0, 0.4088509521997758, 0.21261438118612097, -0.0027708297625327486),
    (3.7, 9.9, -0.17472623691444122, -0.007256455609107987, 0.19292574966399173),
    (3.7, 12.0, 0.2241219477272456, 0.004568045456543261, 0.06006763437418313),
    (3.7, 17.0, -0.03828779600162665, -0.00021508790897559416, 0.18872739099528743),
    (3.7, 24.9, 0.15465544603595474, 0.0002116626712946651, 0.040277228159089344),
    (3.7, 25.1, 0.1596191917632498, 0.00021208452320747235, 0.00923815359304617),
    (3.7, 40.0, -0.06970483222343443, -1.6514200669491537e-05, -0.10414790613224047),
    (3.7, 75.0, 0.07488008552209584, 1.7332303948614777e-06, 0.05320701458398502),
    (3.7, 100.0, 0.05685839734350685, 4.5395337930452517e-07, 0.055691979851218),
    (3.7, 150.0, 0.03152279471874624, 5.614404442949621e-08, 0.05690162455844414),
    (3.7, 400.0, -0.029983503885674168, -1.417349825790562e-09, 0.026353781583820193),
    (3.7, 2000.0, -0.0011673524971182827, -1.4308946897578898e-13, -0.017802703531032017),
    (10.0, 0.01, 2.691138339236345e-30, 0.9999977272750947, 2.6911371159914135e-27),
    (10.0, 0.5, 2.6131773608228033e-13, 0.9943329545339575, 5.2204128676833734e-12),
    (10.0, 1.0, 2.6306151236874534e-10, 0.9775079588697119, 2.6186350562244217e-09),
    (10.0, 2.5, 2.2247284173983834e-06, 0.8668419193412601, 8.643043948082478e-06),
    (10.0, 5.0, 0.0014678026473104741, 0.558509561904916, 0.002584677844854739),
    (10.0, 9.9, 0.19901352409053374, 0.08176993145754273, 0.08501723243861917),
    (10.0, 12.0, 0.3004760352712693, 0.018032683872589893, -0.02001578649157339),
    (10.0, 17.0, -0.19911331972770593, -0.00036700678132715723, 0.07426991250264911),
    (10.0, 24.9, -0.08868880155802568, -3.5969823345547114e-06, 0.13182397733951753),
    (10.0, 25.1, -0.06109503451421172, -2.287345079293284e-06, 0.14333315129546376),
    (10.0, 40.0, 0.11938336278226096, 4.230647918596373e-08, 0.04365426494208726),
    (10.0, 75.0, -0.08041786789189445, -5.3064357492853683e-11, -0.04484476039238693),
    (10.0, 100.0, -0.05473217693547201, -2.033788146313634e-12, -0.057763543712483684),
    (10.0, 150.0, -0.020612788945218587, -1.328272421110788e-14, -0.061670037612375155),
    (10.0, 400.0, 0.03738430612109337, 1.3248063481662462e-18, -0.013987283119050741),
    (10.0, 2000.0, -0.0066869981694897595, -2.426577895744444e-26, 0.0165422608925564),
    (25.5, 0.01, 2.6772576835566356e-85, 0.9999990566042024, 6.827006587926445e-82),
    (25.5, 0.5, 5.62861275564571e-42, 0.9976441875787759, 2.8700614586279984e-40),
    (25.5, 1.0, 2.6521175078353224e-34, 0.9906087942627837, 6.757893931908419e-33),
    (25.5, 2.5, 3.5442658546009456e-24, 0.9426825898406062, 3.59839694218938e-23),
    (25.5, 5.0, 1.4078409755744083e-16, 0.7890924850553173, 7.046015481678879e-16),
    (25.5, 9.9, 2.557220678283077e-09, 0.39028347391783513, 6.091918326392731e-09),
    (25.5, 12.0, 2.1940117286028222e-07, 0.24798567098115193, 4.1383273855444143e-07),
    (25.5, 17.0, 0.00035664576706411584, 0.05598852101238335, 0.00040637984477742364),
    (25.5, 24.9, 0.12427138400713382, 0.0011577031122318626, 0.04540127710724257),
    (25.5, 25.1, 0.13342487130646039, 0.0010135993222129321, 0.04607403045762408),
    (25.5, 40.0, 0.03671618997278446, 1.9259155781513163e-09, -0.10787802943014933),
    (25.5, 75.0, 0.0636712272695, 3.6491391235998373e-16, -0.06679155750468355),
    (25.5, 100.0, 0.07458320581740516, 2.7858033955417164e-19, 0.03049960182898725),
    (25.5, 150.0, -0.012739673909091143, -1.5386527679986762e-24, 0.06348481807774792),
    (25.5, 400.0, -0.010255261846175825, -1.7010864742620504e-35, -0.038504270166614916),
    (25.5, 2000.0, 0.009154492144257476, 2.2786560902552557e-53, 0.01531087247832823),
    (60.0, 0.01, 1.042377990448056e-220, 0.9999995901640171, 6.254267857247516e-217),
    (60.0, 0.5, 9.031932711389307e-119, 0.9989759260918252, 1.083794908637312e-116),
    (60.0, 1.0, 1.0381149765645214e-100, 0.9959098912491691, 6.2278388892169774e-99),
    (60.0, 2.5, 7.64362347439844e-77, 0.9747053602944826, 1.832902669933369e-75),
    (60.0, 5.0, 8.160024038093518e-59, 0.9025385629929171, 9.758530677493187e-58),
    (60.0, 9.9, 3.811707592823348e-41, 0.6683169726098646, 2.278991754126893e-40),
    (60.0, 12.0, 3.2460848900150474e-36, 0.5526621210573118, 1.590803989831291e-35),
    (60.0, 17.0, 2.1160694640780065e-27, 0.30239125447783766, 7.167763210849784e-27),
    (60.0, 24.9, 4.597304305109676e-18, 0.07456190837495386, 1.0097634129035848e-17),
    (60.0, 25.1, 7.118112381894499e-18, 0.07143583751945523, 1.548438657050582e-17),
    (60.0, 40.0, 1.309267138298199e-07, 0.0009449381368448119, 1.4763534441069564e-07),
    (60.0, 75.0, 0.09169364023890723, 2.7582777763543465e-14, 0.04375345045079565),
    (60.0, 100.0, 0.0010631563042277031, 1.0199331511700551e-23, 0.07135573427382387),
    (60.0, 150.0, -0.02714590368578734, -7.082773435486771e-33, 0.057299112057843674),
    (60.0, 400.0, -0.0011277835429869796, -8.139558755438928e-60, -0.03965080605386387),
    (60.0, 2000.0, -0.008412335724735626, -6.999893715357914e-101, -0.01572884916817006),
    (250.5, 0.01, 0.0, 0.9999999005964264, 0.0),
    (250.5, 0.5, 0.0, 0.9997515218072082, 0.0),
    (250.5, 1.0, 0.0, 0.9990064561499074, 0.0),
    (250.5, 2.5, 0.0, 0.9938064594445296, 0.0),
    (250.5, 5.0, 0.0, 0.9754541537694397, 0.0),
    (250.5, 9.9, 1.7663e-320, 0.9071529117120019, 4.4659e-319),
    (250.5, 12.0, 1.430534051812712e-299, 0.8665965448441004, 2.9828250913718093e-298),
    (250.5, 17.0, 9.669417375192308e-262, 0.7501815683773174, 1.4215453692142069e-260),
    (250.5, 24.9, 2.3052969776439814e-220, 0.5395246870140719, 2.3077444104221447e-219),
    (250.5, 25.1, 1.6932845558654782e-219, 0.5341750561504351, 1.6814408272082504e-218),
    (250.5, 40.0, 3.2054302131233177e-169, 0.20280534020088742, 1.9817475648928606e-168),
    (250.5, 75.0, 1.3476500981714018e-102, 0.003499061338395302, 4.295551940194427e-102),
    (250.5, 100.0, 2.991992025114815e-73, 3.919054650533408e-05, 6.874655349765068e-73),
    (250.5, 150.0, 6.152319424574988e-35, 6.24308675909385e-11, 8.240080973929881e-35),
    (250.5, 400.0, 0.029322202510227397, 5.866642839547694e-85, 0.026739297730954417),
    (250.5, 2000.0, 0.0166578585719223, 2.6966596990277986e-260, -0.006536615915412992),
    (501.0, 0.01, 0.0, 0.9999999501992044, 0.0),
    (501.0, 0.5, 0.0, 0.9998755057426131, 0.0),
    (501.0, 1.0, 0.0, 0.9995021157708476, 0.0),
    (501.0, 2.5, 0.0, 0.9968922795601934, 0.0),
    (501.0, 5.0, 0.0, 0.9876268316984441, 0.0),
    (501.0, 9.9, 0.0, 0.9523600332999796, 0.0),
    (501.0, 12.0, 0.0, 0.9307931000709212, 0.0),
    (501.0, 17.0, 0.0, 0.8659354586680974, 0.0),
    (501.0, 24.9, 0.0, 0.7342800614273629, 0.0),
    (501.0, 25.1, 0.0, 0.7306301242494789, 0.0),
    (501.0, 40.0, 0.0, 0.4504783741647772, 0.0),
    (501.0, 75.0, 0.0, 0.060255966191904306, 0.0),
    (501.0, 100.0, 1.675152220286977e-288, 0.006703912943682514, 8.223979399820363e-288),
    (501.0, 150.0, 4.9798807118695245e-203, 1.1961130853636054e-05, 1.5871440917221664e-202),
    (501.0, 400.0, 6.79363219190536e-23, 6.34337613206496e-39, 5.1382567799281674e-23),
    (501.0, 2000.0, 0.017911588400244594, 0.0, 0.002727971926842611),
];
pub const GAMMA: &[(f64, f64)] = &[
    (0.1, 9.51350769866873),
    (0.5, 1.772453850905516),
    (1.0, 1.0),
    (1.3, 0.8974706963062772),
    (2.5, 1.329340388179137),
    (3.7, 4.170651783796604),
    (7.9, 4122.709484285445),
    (10.5, 1133278.3889487856),
    (17.25, 42249866656927.04),
    (33.3, 7.487577596522633e+35),
    (49.9, 4.118011034253036e+62),
    (50.0, 6.082818640342675e+62),
];
pub const ZEROS: &[(f64, f64)] = &[
    (0.0, 2.404825557695773),
    (0.5, 3.141592653589793),
    (1.0, 3.8317059702075125),
    (1.5, 4.493409457909064),
    (2.0, 5.135622301840683),
    (3.5, 6.98793200050052),
    (10.0, 14.475500686554541),
    (100.0, 108.83616589840977),
    (300.0, 312.5773616068493),
];
