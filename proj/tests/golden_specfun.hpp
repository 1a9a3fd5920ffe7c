#pragma once
// Frozen multiprecision reference values (50-digit arithmetic, rounded to 20).
// Regenerating requires an independent arbitrary-precision Bessel implementation.

struct JYRef { int n; double x; double j; double y; };
struct H1pRef { int n; double x; double re; double im; };

inline constexpr JYRef kJYTable[] = {
    {0, 0.25, 0.98443592929585270492, -0.93157302493005868695},
    {0, 0.5, 0.93846980724081290423, -0.44451873350670655715},
    {0, 1.0, 0.76519768655796655145, 0.088256964215676957983},
    {0, 1.7, 0.39798485944610949114, 0.45202700018163462703},
    {0, 2.0, 0.22389077914123566805, 0.51037567264974511960},
    {0, 3.1, -0.29206434765069754006, 0.34310288935449807439},
    {0, 3.3, -0.34429626039888463739, 0.26909199505453377504},
    {0, 3.7699111843077517, -0.40198646981872345946, 0.076981898457269761125},
    {0, 7.5398223686155035, 0.26075862963962808186, 0.12750953573007676479},
    {0, 10.0, -0.24593576445134833520, 0.055671167283599391424},
    {0, 14.0, 0.17107347611045865906, 0.12719256858218368838},
    {0, 20.0, 0.16702466434058315473, 0.062640596809383831162},
    {0, 50.0, 0.055812327669251815005, -0.098064995470077079029},
    {0, 120.0, 0.071823415829156127576, -0.012104365410016202935},
    {0, 200.0, -0.015437439930565091592, -0.054265775249817910694},
    {1, 0.25, 0.12402597732272692273, -2.7041052293152824441},
    {1, 0.5, 0.24226845767487388638, -1.4714723926702430692},
    {1, 1.0, 0.44005058574493351596, -0.78121282130028871655},
    {1, 1.7, 0.57776523152902321980, -0.28472624506406837855},
    {1, 2.0, 0.57672480775687338720, -0.10703243154093754689},
    {1, 3.1, 0.30092113310105762666, 0.34962948226769619453},
    {1, 3.3, 0.22066345298524108270, 0.38785293102370991386},
    {1, 3.7699111843077517, 0.025076444559945285369, 0.41528314913284102333},
    {1, 7.5398223686155035, 0.14500272209310483062, -0.25289705663584749399},
    {1, 10.0, 0.043472746168861436670, 0.24901542420695388392},
    {1, 14.0, 0.13337515469879325311, -0.16664484185617226675},
    {1, 20.0, 0.066833124175850045579, -0.16551161436252129586},
    {1, 50.0, -0.097511828125175137661, -0.056795668562014767942},
    {1, 120.0, -0.011805211433001891117, -0.071874473209149533555},
    {1, 200.0, -0.054304538182378222711, 0.015301824580389989220},
    {2, 0.25, 0.0077718892859626769289, -20.701268809592200866},
    {2, 0.5, 0.030604023458682641307, -5.4413708371742657196},
    {2, 1.0, 0.11490348493190048047, -1.6506826068162543911},
    {2, 1.7, 0.28173894235274135568, -0.78699905319818566062},
    {2, 2.0, 0.35283402861563771915, -0.61740810419068266648},
    {2, 3.1, 0.48620701416750891210, -0.11753548143985536824},
    {2, 3.3, 0.47803168645054589963, -0.034029612615921706027},
    {2, 3.7699111843077517, 0.41528993684167399435, 0.14333265476693157284},
    {2, 7.5398223686155035, -0.22229546300146472406, -0.19459256349172033320},
    {2, 10.0, 0.25463031368512062253, -0.0058680824422086146398},
    {2, 14.0, -0.15201988258205962291, -0.15099897456163686934},
    {2, 20.0, -0.16034135192299815017, -0.079191758245635960748},
    {2, 50.0, -0.059712800794258820511, 0.095793168727596488312},
    {2, 120.0, -0.072020169353039492428, 0.010906457523197044042},
    {2, 200.0, 0.014894394548741309365, 0.054418793495621810586},
    {3, 0.25, 0.00032425125267590813096, -328.51619572415993141},
    {3, 0.5, 0.0025637299945872440754, -42.059494304723882688},
    {3, 1.0, 0.019563353982668405919, -5.8215176059647288478},
    {3, 1.7, 0.085149926948015264153, -1.5670362330493096464},
    {3, 2.0, 0.12894324947440205110, -1.1277837768404277861},
    {3, 3.1, 0.32644275614734096959, -0.50128816799654183098},
    {3, 3.3, 0.35876889422754182595, -0.42910094631573622420},
    {3, 3.7699111843077517, 0.41555986387121095494, -0.26320247904856584784},
    {3, 7.5398223686155035, -0.26293412797172031250, 0.14966249540707822505},
    {3, 10.0, 0.058379379305186812343, -0.25136265718383732978},
    {3, 14.0, -0.17680940686509600251, 0.12350227769570458979},
    {3, 20.0, -0.098901394560449675613, 0.14967326271339410371},
    {3, 50.0, 0.092734804061634432021, 0.064459122060222487007},
    {3, 120.0, 0.0094045391212339080356, 0.072238021793256101690},
    {3, 200.0, 0.054602426073353048898, -0.014213448710477553008},
    {4, 0.25, 0.000010140778259118214222, -7863.6874285702461530},
    {4, 0.5, 0.00016073647636428759684, -499.27256081951232653},
    {4, 1.0, 0.0024766389641099550438, -33.278423028972118695},
    {4, 1.7, 0.018790211581430164861, -4.7437170634464366209},
    {4, 2.0, 0.033995719807568434146, -2.7659432263306006918},
    {4, 3.1, 0.14561767514992522260, -0.85269968242441914332},
    {4, 3.3, 0.17427539396316651118, -0.74615392613996233797},
    {4, 3.7699111843077517, 0.24609412801530955928, -0.56223241051313431285},
    {4, 7.5398223686155035, 0.013059132130183356887, 0.31369019318924324736},
    {4, 10.0, -0.21960268610200853513, -0.14494951186809378323},
    {4, 14.0, 0.076244422497018478974, 0.20392852214551026497},
    {4, 20.0, 0.13067093355486324749, 0.12409373705965419186},
    {4, 50.0, 0.070840977281654952354, -0.088058074080369789871},
    {4, 120.0, 0.072490396309101187830, -0.0072945564335342389575},
    {4, 200.0, -0.013256321766540717898, -0.054845196956936137176},
    {5, 0.25, 2.5365161587472414865e-7, -251309.48151852371696},
    {5, 0.5, 8.0536272413574740860e-6, -7946.3014788074733418},
    {5, 1.0, 0.00024975773021123443138, -260.40586662581222072},
    {5, 1.7, 0.0032745981410678646065, -20.756338183169215629},
    {5, 2.0, 0.0070396297558716854842, -9.9359891284819749810},
    {5, 3.1, 0.049344792626659604855, -1.6992271414858301518},
    {5, 3.3, 0.063716909319528504185, -1.3797570564478088376},
    {5, 3.7699111843077517, 0.10666809532247171831, -0.92989175161326125716},
    {5, 7.5398223686155035, 0.27679029751177947352, 0.18317313689638620616},
    {5, 10.0, -0.23406152818679364044, 0.13540304768936230320},
    {5, 14.0, 0.22037764829196370478, -0.0069716936125558669567},
    {5, 20.0, 0.15116976798239497461, -0.10003576788953242697},
    {5, 50.0, -0.081400247696569639644, -0.078548413913081653386},
    {5, 120.0, -0.0045718460339604955136, -0.072724325555491717620},
    {5, 200.0, -0.055132678944014677614, 0.012019640832200107521},
    {8, 0.25, 1.4757253297378420215e-12, -26975540014.525323520},
    {8, 0.5, 3.7582231547976099550e-10, -106081857.51587979022},
    {8, 1.0, 9.4223441726045005454e-8, -425674.61848650669368},
    {8, 1.7, 6.2348407605872922193e-6, -6533.5820923981427853},
    {8, 2.0, 0.000022179552287925904088, -1853.9221751598764179},
    {8, 3.1, 0.00063037775454772481225, -68.614972018944351303},
    {8, 3.3, 0.0010021052600583880610, -43.702182918741582093},
    {8, 3.7699111843077517, 0.0026416702520249325781, -17.153686288585037072},
    {8, 7.5398223686155035, 0.17828364315301120263, -0.47844635212453802883},
    {8, 10.0, 0.31785412684385722501, 0.0010754737339629142930},
    {8, 14.0, -0.23197310306707981031, 0.036815736940746707560},
    {8, 20.0, -0.073868928840750341319, 0.17100977770523653398},
    {8, 50.0, 0.10405856317363927063, -0.045493023506881563788},
    {8, 120.0, 0.072554599375309644815, 0.0072647076305541648511},
    {8, 200.0, -0.0065963016044177286513, -0.056054679905006256280},
    {10, 0.25, 2.5628321598050106334e-16, -124241617095379.46721},
    {10, 0.5, 2.6131773608228030862e-13, -121963623349.56963053},
    {10, 1.0, 2.6306151236874532070e-10, -121618014.27868918929},
    {10, 1.7, 5.0795165087887878257e-8, -636012.67062090761664},
    {10, 2.0, 2.5153862827167367096e-7, -129184.54220803928264},
    {10, 3.1, 0.000017693630265464580567, -1893.5217944940875601},
    {10, 3.3, 0.000032096001510177265613, -1051.4531695258753079},
    {10, 3.7699111843077517, 0.00011246448702078170872, -305.94944268287135707},
    {10, 7.5398223686155035, 0.040488786710530042020, -1.2392825197176068783},
    {10, 10.0, 0.20748610663335885770, -0.35981415218340272205},
    {10, 14.0, 0.085006705446061017811, 0.23854272714494474293},
    {10, 20.0, 0.18648255802394508321, -0.043894653515658394899},
    {10, 50.0, -0.11384784914946938567, 0.0057238971820535135460},
    {10, 120.0, -0.070696213540718557809, -0.018046575250825488135},
    {10, 200.0, 0.0015301688136801641061, 0.056433444517996071742},
    {15, 0.25, 2.1713331163510301464e-26, -9.7744652898203290266e+23},
    {15, 0.5, 7.0942070766020669976e-22, -29929364609532905756.},
    {15, 1.0, 2.2975315322103444438e-17, -925697327575220.80451},
    {15, 1.7, 6.3847960757187635249e-14, -334527661859.52044845},
    {15, 2.0, 7.1830163560187923954e-13, -29810236465.254529195},
    {15, 3.1, 4.7094758978185959774e-10, -46058798.797885233026},
    {15, 3.3, 1.1789273967835609780e-9, -18454397.319668320871},
    {15, 3.7699111843077517, 8.2401412988164730130e-9, -2661146.1696623261086},
    {15, 7.5398223686155035, 0.00013548516850976521325, -181.44989430541681765},
    {15, 10.0, 0.0045079731437212530468, -6.3647458769391294231},
    {15, 14.0, 0.11743681366983445112, -0.44867835052521890708},
    {15, 20.0, -0.00081206905515374786986, 0.21826661420754130692},
    {15, 50.0, -0.10822559897511455196, 0.040412802054745303246},
    {15, 120.0, -0.050994605018275150336, 0.052408034190755721585},
    {15, 200.0, 0.054209892942437708473, 0.015917487470239085889},
    {20, 0.25, 3.5624805510586983855e-37, -4.4678815064152589164e+34},
    {20, 0.5, 3.7272019617047144607e-31, -4.2714301215659064361e+28},
    {20, 1.0, 3.8735030085246577189e-25, -4.1139703148355052801e+22},
    {20, 1.7, 1.5392189177224394697e-20, -1037763399787798489.3},
    {20, 2.0, 3.9189728050907538391e-19, -40816513889983666.253},
    {20, 3.1, 2.3479775375693966266e-15, -6861530644127.5479405},
    {20, 3.3, 8.0739106125446980344e-15, -1998693563673.9790076},
    {20, 3.7699111843077517, 1.1120717365704481007e-13, -145735336186.44901467},
    {20, 7.5398223686155035, 6.9481750432219197072e-8, -247379.91923541560835},
    {20, 10.0, 0.000011513369247813397783, -1597.4838482696259810},
    {20, 14.0, 0.0027527249952277696125, -8.1454986518721065257},
    {20, 20.0, 0.16474777377532653234, -0.28548945860020348985},
    {20, 50.0, -0.11670435275957973734, 0.016442633948115777650},
    {20, 120.0, 0.0049302157286156236380, 0.073185077743612154220},
    {20, 200.0, 0.037450938710860043346, -0.042385742893228672825},
    {30, 0.25, 3.0438371631111801969e-60, -3.4859612437136081962e+57},
    {30, 0.5, 3.2633568289139784981e-51, -3.2518065601447756643e+48},
    {30, 1.0, 3.4828697942514829022e-42, -3.0481287832256432162e+39},
    {30, 1.7, 2.8104906427316216421e-35, -3.7813416521310762108e+32},
    {30, 2.0, 3.6502562664740971052e-33, -2.9132238482189046719e+30},
    {30, 3.1, 1.7889251187220285366e-27, -5.9630781258205052164e+24},
    {30, 3.3, 1.1552204406110306887e-26, -9.2408209655544096112e+23},
    {30, 3.7699111843077517, 6.1024959683149673439e-25, -1.7525959504856314594e+22},
    {30, 7.5398223686155035, 4.6314167277591640460e-16, -23670227703083.747999},
    {30, 10.0, 1.5510960782574670069e-12, -7256142316.1003306420},
    {30, 14.0, 1.6775399533577875127e-8, -715331.82626773415298},
    {30, 20.0, 0.00012401536360354327865, -114.97814626308341440},
    {30, 50.0, 0.048434257245509417485, -0.11645723493544144770},
    {30, 120.0, 0.066287002791571248115, 0.032941034276995352521},
    {30, 200.0, -0.052122279029882832044, -0.022422775512171563351},
    {40, 0.25, 9.2170075417353143503e-85, -8.6339331340231453347e+81},
    {40, 0.5, 1.0122626959003594127e-72, -7.8619604848825331211e+69},
    {40, 1.0, 1.1079158511286326622e-60, -7.1848747968013842562e+57},
    {40, 1.7, 1.8090777733863603034e-51, -4.4027671933107413251e+48},
    {40, 2.0, 1.1960774581136800271e-48, -6.6615412355271833569e+45},
    {40, 3.1, 4.7441288537271871135e-41, -1.6824519301789322350e+38},
    {40, 3.3, 5.7392037581491919701e-40, -1.3913053283582790577e+37},
    {40, 3.7699111843077517, 1.1553803799302291914e-37, -6.9183710211148968594e+34},
    {40, 7.5398223686155035, 9.7820059565698427303e-26, -8.2836818111913997141e+22},
    {40, 10.0, 6.0308953123469066317e-21, -1362803297269337395.4},
    {40, 14.0, 2.3204299057655619826e-15, -3661200633685.6368131},
    {40, 20.0, 9.9023894137446861364e-10, -9281227.1960582710292},
    {40, 50.0, -0.13817628120116143097, -0.045308011195609007933},
    {40, 120.0, 0.072088646997365717120, 0.020738937536620077196},
    {40, 200.0, -0.031932993297986605204, 0.047212363855706127666},
    {60, 0.25, 7.8399751730335635195e-137, -6.7668719834106002064e+133},
    {60, 0.5, 9.0319327113893072797e-119, -5.8739908800922680545e+115},
    {60, 1.0, 1.0381149765645213319e-100, -5.1110927753066711169e+97},
    {60, 1.7, 6.9153840552795202256e-87, -7.6746223173034286189e+83},
    {60, 2.0, 1.1822372183209694299e-82, -4.4898902537939941888e+79},
    {60, 3.1, 3.0382031414529250268e-71, -1.7484880500815716448e+68},
    {60, 3.3, 1.2866835814224414823e-69, -4.1293830229743376139e+66},
    {60, 3.7699111843077517, 3.7375271356474304040e-66, -1.4222427327376725212e+63},
    {60, 7.5398223686155035, 3.6167299014966714674e-48, -1.4785643088116609197e+45},
    {60, 10.0, 6.9094332494399618981e-41, -7.7870957750152609402e+37},
    {60, 14.0, 2.7198738748910134867e-32, -2.0059057599548493719e+29},
    {60, 20.0, 2.2809263887335596395e-23, -2.4670257583513079176e+20},
    {60, 50.0, 0.0010485195995314180520, -9.1943974189955780252},
    {60, 120.0, -0.067259056098919570150, 0.040023045003923405620},
    {60, 200.0, 0.034156500001271929933, 0.046584428316212467787},
    {80, 0.25, 7.9065958853436895240e-192, -5.0323717896663277217e+188},
    {80, 0.5, 9.5529579464319759009e-168, -4.1651510730046873949e+164},
    {80, 1.0, 1.1522114431332042360e-143, -3.4535193479885604151e+140},
    {80, 1.7, 3.1254483361002149666e-125, -1.2733444771328915218e+122},
    {80, 2.0, 1.3800989121015327989e-119, -2.8839365920111835579e+116},
    {80, 3.1, 2.2852010320613534113e-104, -1.7424570630633393062e+101},
    {80, 3.3, 3.3836676657777255300e-102, -1.1769074212524136478e+99},
    {80, 3.7699111843077517, 1.4135355556600990800e-97, -2.8179690944280819188e+94},
    {80, 7.5398223686155035, 1.4978863723646243786e-73, -2.6682040577357562333e+70},
    {80, 10.0, 8.4835494759342892855e-64, -4.7271873376571679827e+60},
    {80, 14.0, 3.0861390634997534424e-52, -1.3094830783035871452e+49},
    {80, 20.0, 4.0270566388603103932e-40, -1.0204444756148446013e+37},
    {80, 50.0, 2.8051557721833452316e-11, -181729470.99567532766},
    {80, 120.0, -0.068532233880950708804, 0.049193095870575250278},
    {80, 200.0, -0.013950091144558654835, 0.057257405828333656968},
    {100, 0.25, 5.2593304558365607362e-249, -6.0523080585872912179e+245},
    {100, 0.5, 6.6638999042770851533e-219, -4.7766903780417643734e+215},
    {100, 1.0, 8.4318287896267085492e-189, -3.7752878101105284001e+185},
    {100, 1.7, 9.3064081890488651213e-166, -3.4208245552132354387e+162},
    {100, 2.0, 1.0609531124391724840e-158, -3.0008260488574508199e+155},
    {100, 3.1, 1.1293650368428607035e-139, -2.8198407899318845605e+136},
    {100, 3.3, 5.8436287626215778368e-137, -5.4500957871614466579e+133},
    {100, 3.7699111843077517, 3.5061303953410758194e-131, -9.0851254537357754058e+127},
    {100, 7.5398223686155035, 3.9990255123970928490e-101, -7.9824105238784710574e+97},
    {100, 10.0, 6.5973160641553809722e-89, -4.8491482711806071288e+85},
    {100, 14.0, 2.1310751903146121820e-74, -1.5085168196133426740e+71},
    {100, 20.0, 3.9617550943362517738e-59, -8.2002648144681930400e+55},
    {100, 50.0, 1.1159273690838092780e-21, -3293800188202666614.2},
    {100, 120.0, 0.075737179130010701447, 0.062052590956877140679},
    {100, 200.0, 0.0093332141865575864571, -0.059902943572273546804},
    {120, 1.0, 1.1223010335163907724e-235, -2.3636033652255739529e+232},
    {120, 1.7, 5.0382993835230514135e-208, -5.2653651972067799128e+204},
    {120, 2.0, 1.4825755054826073411e-199, -1.7894204319833017519e+196},
    {120, 3.1, 1.0134122575359338983e-176, -2.6183500201293794898e+173},
    {120, 3.3, 1.8319218020842984115e-173, -1.4485258206263641944e+170},
    {120, 3.7699111843077517, 1.5775630114991690824e-166, -1.6822734961767770248e+163},
    {120, 7.5398223686155035, 1.9200172356602361514e-130, -1.3842762693197905768e+127},
    {120, 10.0, 9.1453484379558429562e-116, -2.9105962062797016533e+112},
    {120, 14.0, 2.5716180083929682717e-98, -1.0385766439917479681e+95},
    {120, 20.0, 6.5231651116456876936e-80, -4.1240905966368424920e+76},
    {120, 50.0, 4.3030265217676978838e-34, -6.7812142439078121929e+30},
    {120, 120.0, 0.090685077104034873635, -0.15707812523675975923},
    {120, 200.0, -0.043319105582693592968, -0.045849896543953670567},
};

// n = 0..85 at x = pi/2
inline constexpr double kJHalfPi[] = {
    0.47200121576823476745,
    0.56682408890587393771,
    0.24970162913520354370,
    0.069035888293596051768,
    0.013996039808773808756,
    0.0022453571232774589563,
    0.00029834759827442324964,
    0.000033850637921076245582,
    3.3521974349584200750e-6,
    2.9456476651446566676e-7,
    2.3266147948659764505e-8,
    1.6690297044593111606e-9,
    1.0967288294783665873e-10,
    6.6485141922448519263e-12,
    3.7408243505168228811e-13,
    1.9637497935898364146e-14,
    9.6614892293166379103e-16,
    4.4726300579706028178e-17,
    1.9550850608162951674e-18,
    8.0948449834607033119e-20,
    3.1835200579169002379e-21,
    1.1922274934042299993e-22,
    4.2614430208663169390e-24,
    1.4568163923564684811e-25,
    4.7723315170288140316e-27,
    1.5006975796200316455e-28,
    4.5372406226100917433e-30,
    1.3209083983177737414e-31,
    3.7079582095412207747e-33,
    1.0049280139426722495e-34,
    2.6326426543190072528e-36,
    6.6740644797867168692e-38,
    1.6390198117882772312e-39,
    3.9030049275811592186e-41,
    9.0205985225825394575e-43,
    2.0252095036098331788e-44,
    4.4203697107413747786e-46,
    9.3872289372910749828e-48,
    1.9409956818815599594e-49,
    3.9104043697424606046e-51,
    7.6809510833975459589e-53,
    1.4718944807978026293e-54,
    2.7533769821448332234e-56,
    5.0307039895008840629e-58,
    8.9825848963985267362e-60,
    1.5682242746957496751e-61,
    2.6783306045848780812e-63,
    4.4768753492579644271e-65,
    7.3271923200496299978e-67,
    1.1747373501818178919e-68,
    1.8457197019270608911e-70,
    2.8430631334770023380e-72,
    4.2950703094670478340e-74,
    6.3661654729357444017e-76,
    9.2611362174415796196e-78,
    1.3227521261030667227e-79,
    1.8555141615748543652e-81,
    2.5571744353349198498e-83,
    3.4633832205677112942e-85,
    4.6112016452002157329e-87,
    6.0370664817466098741e-89,
    7.7742205276260162822e-91,
    9.8497146522630979445e-93,
    1.2281161375951251798e-94,
    1.5073487921007300066e-96,
    1.8215988419057233291e-98,
    2.1680000206278754945e-100,
    2.5417519931594554378e-102,
    2.9361027414955260264e-104,
    3.3424699719465982488e-106,
    3.7507081131871081637e-108,
    4.1495138158599674047e-110,
    4.5269487513877470133e-112,
    4.8710456460328382898e-114,
    5.1704535175761397196e-116,
    5.4150723395552788593e-118,
    5.5966266636193873219e-120,
    5.7091322668124870178e-122,
    5.7492191706458212949e-124,
    5.7162873180195999524e-126,
    5.6124862699976223617e-128,
    5.4425257569929490754e-130,
    5.2133380728794738227e-132,
    4.9336246716326809612e-134,
    4.6133268764798047895e-136,
    4.2630638317391212342e-138,
};

inline constexpr double kYHalfPi[] = {
    0.41000364504657584147,
    -0.36628039556285690068,
    -0.87636632913844306451,
    -1.8653681363040570691,
    -6.2488151007553264889,
    -29.959585839775629527,
    -184.47983207469441953,
    -1379.3625185818434838,
    -12109.332504212562028,
    -121965.28551910063626,
    -1385509.8889662918568,
    -17518894.517015971832,
    -243977732.18122999958,
    -3710186265.2583448479,
    -61167448594.201220985,
    -1086621215344.4328677,
    -20691769074276.521962,
    -420442636959006.88692,
    -9079819489297656.1118,
    -207673691553995483.72,
    -5014868953776618733.7,
    -1.2749491558070687742e+20,
    -3.4039480647167950939e+21,
    -9.5221413337306599223e+22,
    -2.7851084381677962645e+24,
    -8.5011423383082491287e+25,
    -2.7032125417009350759e+27,
    -8.9402753330476611909e+28,
    -3.0707370530695835202e+30,
    -1.0938454497531744880e+32,
    -4.0358383820645777711e+33,
    -1.5404828618116263952e+35,
    -6.0763156243185381666e+36,
    -2.4741732256740256095e+38,
    -1.0389633816170994933e+40,
    -4.4952133209969728709e+41,
    -2.0021802134281514627e+43,
    -9.1728228710018405715e+44,
    -4.3193021217845202716e+46,
    -2.0888950992164268426e+48,
    -1.0368369693868975110e+50,
    -5.2784784283678203652e+51,
    -2.7544778261526755674e+53,
    -1.4724583913657311752e+55,
    -8.0588522051889336538e+56,
    -4.5133012392506309604e+58,
    -2.5851252415817346243e+60,
    -1.5136311652865313512e+62,
    -9.0553256369543899785e+63,
    -5.5326937407184516595e+65,
    -3.4508722526361129126e+67,
    -2.1963402385687330136e+69,
    -1.4258532079485102231e+71,
    -9.4381576443685997803e+72,
    -6.3676029841869743733e+74,
    -4.3770975035414258911e+76,
    -3.0645647376703575373e+78,
    -2.1846402966352358640e+80,
    -1.5851886810440578947e+82,
    -1.1704099864220206627e+84,
    -8.7906672530851789667e+85,
    -6.7144046927554638263e+87,
    -5.2140387335193715420e+89,
    -4.1153351475753039458e+91,
    -3.3005572894574259950e+93,
    -2.6891245052699436818e+95,
    -2.2252047238080015026e+97,
    -1.8696553962088029564e+99,
    -1.5947253337995786470e+101,
    -1.3805308378899111072e+103,
    -1.2126855817808041807e+105,
    -1.0806894135536519178e+107,
    -9.7682204425016674047e+108,
    -8.9537641859265896797e+110,
    -8.3212324220570280149e+112,
    -7.8393470372959777897e+114,
    -7.4851928663485521819e+116,
    -7.2423531689237040968e+118,
    -7.0996143284543585790e+120,
    -7.0500933426611505498e+122,
    -7.0906915725478794233e+124,
    -7.2218141184163873076e+126,
    -7.4473213802812507195e+128,
    -7.7747015672432676610e+130,
    -8.2154729795226882468e+132,
    -8.7858451938777340811e+134,
};

inline constexpr H1pRef kH1pTable[] = {
    {4, 3.3, 0.14752599245400666088, 0.47532805506603630668},
    {0, 2.0, -0.57672480775687338720, 0.10703243154093754689},
    {7, 7.5398223686155035, 0.087880879228719565470, 0.20384853854559864706},
    {1, 0.25, 0.48833202000494501400, 9.8848478923310710895},
};
