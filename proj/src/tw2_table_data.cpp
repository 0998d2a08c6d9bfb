// Generated by tools/generate_tw2_table.py; do not edit by hand.
// F2 values on s in [-10, 6], step 0.02, from a Fredholm-determinant
// Nystrom evaluation of the Airy kernel (cross-checked against a
// Painleve II integration; agreement ~1e-10 or better).

#include "royroot/specfun.hpp"

namespace royroot {

const double kTw2GridLo = -10.0;
const double kTw2GridStep = 0.02;
const int kTw2GridSize = 801;

const double kTw2Cdf[] = {
    4.21045989998419217e-37, 6.93700261580091547e-37, 1.14063167568916029e-36, 1.87172595901243666e-36,
    3.06533441984572387e-36, 5.01026414435890265e-36, 8.17295487468692769e-36, 1.33054876091308254e-35,
    2.16189833546547017e-35, 3.50570245204854639e-35, 5.67374302628000559e-35, 9.16447522639975815e-35,
    1.47740495154723560e-34, 2.37706428294527288e-34, 3.81713262367334911e-34, 6.11771857826460842e-34,
    9.78583884145198865e-34, 1.56230245709128142e-33, 2.48940902259678844e-33, 3.95902596493616500e-33,
    6.28410279247909871e-33, 9.95556190411980053e-33, 1.57418690608683907e-32, 2.48437181297215702e-32,
    3.91333821163396546e-32, 6.15249080272092425e-32, 9.65453758932369019e-32, 1.51212089074582070e-31,
    2.36386043914267939e-31, 3.68838448449260728e-31, 5.74424423384189577e-31, 8.92921020383470750e-31,
    1.38541108664613914e-30, 2.14551805955701509e-30, 3.31644979558648920e-30, 5.11689093340507731e-30,
    7.88008482957671110e-30, 1.21129561493683557e-29, 1.85851032235729793e-29, 2.84627889165484619e-29,
    4.35100107981641395e-29, 6.63899291913724065e-29, 1.01115521629472221e-28, 1.53722855254570722e-28,
    2.33273429324317134e-28, 3.53346005303348044e-28, 5.34250324646599481e-28, 8.06308253936477275e-28,
    1.21470413860989857e-27, 1.82664927824872956e-27, 2.74193049635959973e-27, 4.10843527307602724e-27,
    6.14492441721564110e-27, 9.17442141591015508e-27, 1.36730232624555965e-26, 2.03411679498850803e-26,
    3.02074809447541538e-26, 4.47797846876293083e-26, 6.62644023890414433e-26, 9.78838169605225436e-26,
    1.44336364166588303e-25, 2.12459672128449202e-25, 3.12187081003867875e-25, 4.57923282880602214e-25,
    6.70520000204258575e-25, 9.80107042032356708e-25, 1.43014460642509649e-24, 2.08320837187198097e-24,
    3.02923924227225293e-24, 4.39728149448293799e-24, 6.37215822151844594e-24, 9.21811481747010512e-24,
    1.33122882490560522e-23, 1.91919942565463686e-23, 2.76214209550466892e-23, 3.96855305189374594e-23,
    5.69220285062423556e-23, 8.15065060413442275e-23, 1.16511736647868718e-22, 1.66270147270676007e-22,
    2.36879699293288133e-22, 3.36908602069846586e-22, 4.78375347170844906e-22, 6.78109224804251362e-22,
    9.59635741412412793e-22, 1.35578504215755989e-21, 1.91229393313753081e-21, 2.69277197114230884e-21,
    3.78553595957340090e-21, 5.31299956504153097e-21, 7.44455128748814648e-21, 1.04141866149511225e-20,
    1.45446074627868688e-20, 2.02801055615708720e-20, 2.82313546115603092e-20, 3.92363194076527331e-20,
    5.44429419491684831e-20, 7.54211967640664817e-20, 1.04314699186203000e-19, 1.44045465905029829e-19,
    1.98590014940424815e-19, 2.73351016043355687e-19, 3.75656742708782329e-19, 5.15431117093254647e-19,
    7.06091145187248353e-19, 9.65746902860558454e-19, 1.31880337076677724e-18, 1.79809518677584228e-18,
    2.44772684480907968e-18, 3.32684530996001023e-18, 4.51464270056232142e-18, 6.11697947779222110e-18,
    8.27513832916483594e-18, 1.11773754746396742e-17, 1.50741382821977407e-17, 2.02980803945041514e-17,
    2.72903432338240293e-17, 3.66350107214328970e-17, 4.91042048207786849e-17, 6.57170131521758207e-17,
    8.78163663902363983e-17, 1.17169172430972146e-16, 1.56096531307994141e-16, 2.07642798595418931e-16,
    2.75794731127734376e-16, 3.65765101388509943e-16, 4.84359157262359892e-16, 6.40447377816909844e-16,
    8.45574380634655709e-16, 1.11474195612965048e-15, 1.46741442466641272e-15, 1.92880740980279893e-15,
    2.53153731089379302e-15, 3.31772911225399307e-15, 4.34170566273348123e-15, 5.67341347027557534e-15,
    7.40277986983757510e-15, 9.64524618896531839e-15, 1.25487833271331207e-14, 1.63027731324193842e-14,
    2.11492343747011668e-14, 2.73969902530624585e-14, 3.54395207344692326e-14, 4.57774233676423567e-14,
    5.90466288488696548e-14, 7.60537914163218167e-14, 9.78206106313128717e-14, 1.25639253600131459e-13,
    1.61141552554502655e-13, 2.06385269634373823e-13, 2.63961475808973411e-13, 3.37128008890172661e-13,
    4.29975094083842600e-13, 5.47630567574460315e-13, 6.96513790241947517e-13, 8.84649331685511491e-13,
    1.12205391262458670e-12, 1.42121300038915523e-12, 1.79766695301236865e-12, 2.27073081859269374e-12,
    2.86437694874059148e-12, 3.60831565148262111e-12, 4.53931635305547190e-12, 5.70282041274239014e-12,
    7.15490706201173905e-12, 8.96468626135553515e-12, 1.12172068920080469e-11, 1.40169860879970235e-11,
    1.74922860932813779e-11, 2.18002893961706133e-11, 2.71333516784791776e-11, 3.37265460299642227e-11,
    4.18667518759186485e-11, 5.19035889918482324e-11, 6.42625521145842309e-11, 7.94607662598090607e-11,
    9.81258583348215814e-11, 1.21018528896932090e-10, 1.49059510700586554e-10, 1.83361720398090245e-10,
    2.25268548831590367e-10, 2.76399396670980256e-10, 3.38703749091303514e-10, 4.14525299211443930e-10,
    5.06677879470570202e-10, 6.18535247478446663e-10, 7.54137103811493114e-10, 9.18314098822561203e-10,
    1.11683502126687424e-09, 1.35657986030812838e-09, 1.64574300197692741e-09, 1.99407147182641237e-09,
    2.41314387570060936e-09, 2.91669653278135936e-09, 3.52100425097318611e-09, 4.24532427784477886e-09,
    5.11241318568343001e-09, 6.14912783301617089e-09, 7.38712310547101205e-09, 8.86366089374118282e-09,
    1.06225467401740362e-08, 1.27152127959859192e-08, 1.52019682096024808e-08, 1.81534408319014400e-08,
    2.16522372137040075e-08, 2.57948513059444219e-08, 3.06938560967475578e-08, 3.64804166564800810e-08,
    4.33071677582124460e-08, 5.13515044301205078e-08, 6.08193395215158785e-08, 7.19493886708707365e-08,
    8.50180499929030121e-08, 1.00344953407100212e-07, 1.18299262851061612e-07, 1.39306823720848263e-07,
    1.63858257798681173e-07, 1.92518118723202218e-07, 2.25935232784049787e-07, 2.64854362527050833e-07,
    3.10129344403356336e-07, 3.62737866522659687e-07, 4.23798068543786949e-07, 4.94587162888918633e-07,
    5.76562294872254233e-07, 6.71383878974597597e-07, 7.80941669509485841e-07, 9.07383846225219858e-07,
    1.05314941910294048e-06, 1.22100428169615246e-06, 1.41408126884492486e-06, 1.63592460248670340e-06,
    1.89053913857667341e-06, 2.18244485875341245e-06, 2.51673708236361941e-06, 2.89915290771392265e-06,
    3.33614442583937939e-06, 3.83495928565025039e-06, 4.40372922589749441e-06, 5.05156722681369665e-06,
    5.78867397249059998e-06, 6.62645435374465621e-06, 7.57764478035179936e-06, 8.65645211066937728e-06,
    9.87870504580538640e-06, 1.12620188741320105e-05, 1.28259744899133783e-05, 1.45923126467214717e-05,
    1.65851444418268443e-05, 1.88311790613236127e-05, 2.13599698473430738e-05, 2.42041797772898404e-05,
    2.73998674706579379e-05, 3.09867948608413899e-05, 3.50087576870294722e-05, 3.95139399740950125e-05,
    4.45552936759988053e-05, 5.01909446597294541e-05, 5.64846262018835562e-05, 6.35061411579064609e-05,
    7.13318539439696257e-05, 8.00452134432515141e-05, 8.97373079109203511e-05, 1.00507452905062824e-04,
    1.12463813213673576e-04, 1.25724059679375392e-04, 1.40416061744324258e-04, 1.56678616446147837e-04,
    1.74662214491879325e-04, 1.94529843920391069e-04, 2.16457831733776176e-04, 2.40636723734830710e-04,
    2.67272202650713740e-04, 2.96586044451785673e-04, 3.28817112589517590e-04, 3.64222389678478433e-04,
    4.03078045934506597e-04, 4.45680543454430222e-04, 4.92347775183152336e-04, 5.43420237161218044e-04,
    5.99262232380610885e-04, 6.60263104300451214e-04, 7.26838497786703726e-04, 7.99431644942993295e-04,
    8.78514672993862948e-04, 9.64589931068750382e-04, 1.05819133241563017e-03, 1.15988570824936501e-03,
    1.27027416911361444e-03, 1.38999346930701183e-03, 1.51971736959706006e-03, 1.66015799312159104e-03,
    1.81206716905778394e-03, 1.97623775832622695e-03, 2.15350495529527007e-03, 2.34474755915893996e-03,
    2.55088920838481654e-03, 2.77289957136840062e-03, 3.01179548618823708e-03, 3.26864204213725461e-03,
    3.54455359550884296e-03, 3.84069471194986882e-03, 4.15828102754921096e-03, 4.49858002072541126e-03,
    4.86291168689934224e-03, 5.25264910790168571e-03, 5.66921890806079427e-03, 6.11410158895780726e-03,
    6.58883173491571494e-03, 7.09499808141085021e-03, 7.63424343876614297e-03, 8.20826446369644913e-03,
    8.81881127153701788e-03, 9.46768688229424234e-03, 1.01567464940108092e-02, 1.08878965773401663e-02,
    1.16630937856743427e-02, 1.24843436756650328e-02, 1.33536992335196447e-02, 1.42732592030407890e-02,
    1.52451662120072530e-02, 1.62716046941650816e-02, 1.73547986048085759e-02, 1.84970089286780187e-02,
    1.97005309796825789e-02, 2.09676914927663834e-02, 2.23008455090811970e-02, 2.37023730564863006e-02,
    2.51746756282861424e-02, 2.67201724640145077e-02, 2.83412966369835963e-02, 3.00404909542399956e-02,
    3.18202036754897527e-02, 3.36828840584732850e-02, 3.56309777391854154e-02, 3.76669219562370261e-02,
    3.97931406295362958e-02, 4.20120393043326920e-02, 4.43259999724964771e-02, 4.67373757837149240e-02,
    4.92484856600459639e-02, 5.18616088280004356e-02, 5.45789792829950923e-02, 5.74027802016491978e-02,
    6.03351383179709239e-02, 6.33781182799876691e-02, 6.65337170038326625e-02, 6.98038580426745825e-02,
    7.31903859882060970e-02, 7.66950609226397240e-02, 8.03195529393356950e-02, 8.40654367502817051e-02,
    8.79341863986576322e-02, 9.19271700946638209e-02, 9.60456451926414156e-02, 1.00290753327305443e-01,
    1.04663515726604719e-01, 1.09164828718345722e-01, 1.13795459447269737e-01, 1.18556041818737801e-01,
    1.23447072684567533e-01, 1.28468908285912481e-01, 1.33621760967294806e-01, 1.38905696175135346e-01,
    1.44320629753215718e-01, 1.49866325546598955e-01, 1.55542393324547640e-01, 1.61348287031939902e-01,
    1.67283303377614850e-01, 1.73346580766950864e-01, 1.79537098584838434e-01, 1.85853676834024983e-01,
    1.92294976132599965e-01, 1.98859498073174212e-01, 2.05545585945070469e-01, 2.12351425819593320e-01,
    2.19275047997219252e-01, 2.26314328814302107e-01, 2.33466992805662715e-01, 2.40730615218225946e-01,
    2.48102624869679683e-01, 2.55580307344966617e-01, 2.63160808522305667e-01, 2.70841138419311733e-01,
    2.78618175348788577e-01, 2.86488670372712972e-01, 2.94449252042005505e-01, 3.02496431408780742e-01,
    3.10626607296916268e-01, 3.18836071816013367e-01, 3.27121016103094686e-01, 3.35477536275741173e-01,
    3.43901639579783813e-01, 3.52389250714150171e-01, 3.60936218315035195e-01, 3.69538321581178553e-01,
    3.78191277021759364e-01, 3.86890745308165640e-01, 3.95632338210772538e-01, 4.04411625601779123e-01,
    4.13224142505126957e-01, 4.22065396174627183e-01, 4.30930873181512908e-01, 4.39816046492874924e-01,
    4.48716382522680424e-01, 4.57627348137409962e-01, 4.66544417598732775e-01, 4.75463079426113100e-01,
    4.84378843162702855e-01, 4.93287246028454474e-01, 5.02183859444994884e-01, 5.11064295417423375e-01,
    5.19924212758898996e-01, 5.28759323144610827e-01, 5.37565396982459087e-01, 5.46338269088597728e-01,
    5.55073844156751761e-01, 5.63768102011108829e-01, 5.72417102633393959e-01, 5.81016990955619317e-01,
    5.89564001410876504e-01, 5.98054462235413919e-01, 6.06484799516121775e-01, 6.14851540978438971e-01,
    6.23151319510564017e-01, 6.31380876420730153e-01, 6.39537064425151125e-01, 6.47616850365093422e-01,
    6.55617317652379072e-01, 6.63535668443370641e-01, 6.71369225542348791e-01, 6.79115434035897692e-01,
    6.86771862660663812e-01, 6.94336204907573751e-01, 7.01806279866222349e-01, 7.09180032813848893e-01,
    7.16455535553860323e-01, 7.23630986509478769e-01, 7.30704710578598648e-01, 7.37675158756459393e-01,
    7.44540907533171703e-01, 7.51300658073584260e-01, 7.57953235187362240e-01, 7.64497586097466542e-01,
    7.70932779015576997e-01, 7.77258001533221776e-01, 7.83472558837659538e-01, 7.89575871761710291e-01,
    7.95567474676934450e-01, 8.01447013239633521e-01, 8.07214241999287929e-01, 8.12869021879063847e-01,
    8.18411317538049965e-01, 8.23841194624908013e-01, 8.29158816932522025e-01, 8.34364443463230465e-01,
    8.39458425414078335e-01, 8.44441203091421344e-01, 8.49313302764104661e-01, 8.54075333464182407e-01,
    8.58727983744055456e-01, 8.63272018398625773e-01, 8.67708275160871900e-01, 8.72037661378964435e-01,
    8.76261150682852707e-01, 8.80379779647889715e-01, 8.84394644462865087e-01, 8.88306897609433599e-01,
    8.92117744559708381e-01, 8.95828440498397605e-01, 8.99440287075601752e-01, 9.02954629196027980e-01,
    9.06372851850066663e-01, 9.09696376991865674e-01, 9.12926660469155382e-01, 9.16065189009289016e-01,
    9.19113477265650514e-01, 9.22073064928185193e-01, 9.24945513901575311e-01, 9.27732405554179018e-01,
    9.30435338040617177e-01, 9.33055923700513712e-01, 9.35595786535648788e-01, 9.38056559767469267e-01,
    9.40439883476587357e-01, 9.42747402325713746e-01, 9.44980763367062049e-01, 9.47141613935144400e-01,
    9.49231599625546374e-01, 9.51252362360046511e-01, 9.53205538538234975e-01, 9.55092757275547211e-01,
    9.56915638727458551e-01, 9.58675792499328994e-01, 9.60374816141280174e-01, 9.62014293727226910e-01,
    9.63595794517122628e-01, 9.65120871701220073e-01, 9.66591061225109294e-01, 9.68007880694073397e-01,
    9.69372828355263394e-01, 9.70687382156027345e-01, 9.71952998876657537e-01, 9.73171113335714266e-01,
    9.74343137666043080e-01, 9.75470460659462524e-01, 9.76554447178124674e-01, 9.77596437630411819e-01,
    9.78597747509277749e-01, 9.79559666990816535e-01, 9.80483460590889533e-01, 9.81370366877577172e-01,
    9.82221598237228766e-01, 9.83038340691845591e-01, 9.83821753765606655e-01, 9.84572970398250424e-01,
    9.85293096903102850e-01, 9.85983212967588063e-01, 9.86644371693958688e-01, 9.87277599678165418e-01,
    9.87883897124674948e-01, 9.88464237995195338e-01, 9.89019570189202168e-01, 9.89550815754287605e-01,
    9.90058871124355644e-01, 9.90544607383716191e-01, 9.91008870555231014e-01, 9.91452481910670369e-01,
    9.91876238301507729e-01, 9.92280912508451629e-01, 9.92667253608037203e-01, 9.93035987354663474e-01,
    9.93387816576562943e-01, 9.93723421584168931e-01, 9.94043460589490002e-01, 9.94348570135086041e-01,
    9.94639365531337138e-01, 9.94916441300776833e-01, 9.95180371628247240e-01, 9.95431710815761983e-01,
    9.95670993740984445e-01, 9.95898736318298172e-01, 9.96115435961485440e-01, 9.96321572047104365e-01,
    9.96517606377687271e-01, 9.96703983643967062e-01, 9.96881131885342220e-01, 9.97049462947894982e-01,
    9.97209372939268146e-01, 9.97361242679808191e-01, 9.97505438149389190e-01, 9.97642310929392040e-01,
    9.97772198639353403e-01, 9.97895425367833044e-01, 9.98012302097111115e-01, 9.98123127121327669e-01,
    9.98228186457749911e-01, 9.98327754250854293e-01, 9.98422093168987002e-01, 9.98511454793337250e-01,
    9.98596079999061081e-01, 9.98676199328346170e-01, 9.98752033355310265e-01, 9.98823793042582952e-01,
    9.98891680089501799e-01, 9.98955887271836818e-01, 9.99016598772999309e-01, 9.99073990506711862e-01,
    9.99128230431125197e-01, 9.99179478854388514e-01, 9.99227888731706093e-01, 9.99273605953914235e-01,
    9.99316769627640378e-01, 9.99357512347106458e-01, 9.99395960457665544e-01, 9.99432234311155798e-01,
    9.99466448513175121e-01, 9.99498712162400160e-01, 9.99529129082055601e-01, 9.99557798043660628e-01,
    9.99584812983203896e-01, 9.99610263209866456e-01, 9.99634233607459843e-01, 9.99656804828703338e-01,
    9.99678053482520146e-01, 9.99698052314497709e-01, 9.99716870380666256e-01, 9.99734573214773437e-01,
    9.99751222989200272e-01, 9.99766878669705372e-01, 9.99781596164138420e-01, 9.99795428465305891e-01,
    9.99808425788152655e-01, 9.99820635701411997e-01, 9.99832103253906701e-01, 9.99842871095656838e-01,
    9.99852979593939040e-01, 9.99862466944489658e-01, 9.99871369277984923e-01, 9.99879720761955082e-01,
    9.99887553698307951e-01, 9.99894898616592309e-01, 9.99901784363136370e-01, 9.99908238186252185e-01,
    9.99914285817615434e-01, 9.99919951549947505e-01, 9.99925258311180398e-01, 9.99930227735199129e-01,
    9.99934880229309431e-01, 9.99939235038555307e-01, 9.99943310307003119e-01, 9.99947123136129767e-01,
    9.99950689640405121e-01, 9.99954025000213242e-01, 9.99957143512192337e-01, 9.99960058637126226e-01,
    9.99962783045469927e-01, 9.99965328660629815e-01, 9.99967706700079062e-01, 9.99969927714399742e-01,
    9.99972001624374163e-01, 9.99973937756159392e-01, 9.99975744874682659e-01, 9.99977431215307022e-01,
    9.99979004513853575e-01, 9.99980472035055801e-01, 9.99981840599527549e-01, 9.99983116609295952e-01,
    9.99984306071986184e-01, 9.99985414623706492e-01, 9.99986447550712421e-01, 9.99987409809885541e-01,
    9.99988306048114062e-01, 9.99989140620605177e-01, 9.99989917608189893e-01, 9.99990640833678501e-01,
    9.99991313877296784e-01, 9.99991940091273457e-01, 9.99992522613596280e-01, 9.99993064380997443e-01,
    9.99993568141200884e-01, 9.99994036464476155e-01, 9.99994471754516168e-01, 9.99994876258714749e-01,
    9.99995252077816699e-01, 9.99995601175032167e-01, 9.99995925384612017e-01, 9.99996226419907819e-01,
    9.99996505880976327e-01, 9.99996765261720544e-01, 9.99997005956608342e-01, 9.99997229266986309e-01,
    9.99997436407027762e-01, 9.99997628509302294e-01, 9.99997806630025132e-01, 9.99997971753976866e-01,
    9.99998124799127863e-01, 9.99998266620974796e-01, 9.99998398016612611e-01, 9.99998519728555135e-01,
    9.99998632448317659e-01, 9.99998736819775469e-01, 9.99998833442307333e-01, 9.99998922873753693e-01,
    9.99999005633177673e-01, 9.99999082203449352e-01, 9.99999153033675148e-01, 9.99999218541469559e-01,
    9.99999279115068362e-01, 9.99999335115329013e-01, 9.99999386877574725e-01, 9.99999434713346513e-01,
    9.99999478912020456e-01, 9.99999519742322596e-01, 9.99999557453762455e-01, 9.99999592277941440e-01,
    9.99999624429802503e-01, 9.99999654108781555e-01, 9.99999681499889159e-01, 9.99999706774717168e-01,
    9.99999730092374639e-01, 9.99999751600367248e-01, 9.99999771435420848e-01, 9.99999789724229537e-01,
    9.99999806584179862e-01, 9.99999822124001292e-01, 9.99999836444393053e-01, 9.99999849638592786e-01,
    9.99999861792909006e-01, 9.99999872987227700e-01, 9.99999883295467185e-01, 9.99999892786014088e-01,
    9.99999901522122370e-01, 9.99999909562287570e-01, 9.99999916960594204e-01, 9.99999923767034504e-01,
    9.99999930027816286e-01, 9.99999935785632066e-01, 9.99999941079925625e-01, 9.99999945947127600e-01,
    9.99999950420879524e-01, 9.99999954532243662e-01, 9.99999958309890857e-01, 9.99999961780283275e-01,
    9.99999964967839272e-01, 9.99999967895081388e-01, 9.99999970582788666e-01, 9.99999973050119562e-01,
    9.99999975314739165e-01, 9.99999977392931561e-01, 9.99999979299703967e-01, 9.99999981048885100e-01,
    9.99999982653215325e-01, 9.99999984124429142e-01, 9.99999985473333908e-01, 9.99999986709878885e-01,
    9.99999987843224192e-01, 9.99999988881799418e-01, 9.99999989833363023e-01, 9.99999990705051855e-01,
    9.99999991503431218e-01, 9.99999992234538837e-01, 9.99999992903926049e-01, 9.99999993516697439e-01,
    9.99999994077543919e-01, 9.99999994590776042e-01, 9.99999995060355307e-01, 9.99999995489919802e-01,
    9.99999995882812964e-01, 9.99999996242102451e-01, 9.99999996570606009e-01, 9.99999996870910790e-01,
    9.99999997145389230e-01, 9.99999997396220364e-01, 9.99999997625401260e-01, 9.99999997834767007e-01,
    9.99999998025996817e-01, 9.99999998200631790e-01, 9.99999998360085796e-01, 9.99999998505653687e-01,
    9.99999998638521959e-01, 9.99999998759779074e-01, 9.99999998870419349e-01, 9.99999998971357162e-01,
    9.99999999063426737e-01, 9.99999999147393681e-01, 9.99999999223958436e-01, 9.99999999293761599e-01,
    9.99999999357389147e-01, 9.99999999415379426e-01, 9.99999999468220713e-01, 9.99999999516363980e-01,
    9.99999999560219344e-01, 9.99999999600161726e-01, 9.99999999636534520e-01, 9.99999999669651696e-01,
    9.99999999699798914e-01, 9.99999999727238409e-01, 9.99999999752208546e-01, 9.99999999774929149e-01,
    9.99999999795599059e-01, 9.99999999814399465e-01, 9.99999999831497677e-01, 9.99999999847044574e-01,
    9.99999999861178601e-01, 9.99999999874026879e-01, 9.99999999885703872e-01, 9.99999999896314384e-01,
    9.99999999905955228e-01, 9.99999999914713111e-01, 9.99999999922666749e-01, 9.99999999929889971e-01,
    9.99999999936448503e-01, 9.99999999942402296e-01, 9.99999999947806195e-01, 9.99999999952710827e-01,
    9.99999999957161267e-01, 9.99999999961198038e-01, 9.99999999964860886e-01, 9.99999999968182562e-01,
    9.99999999971194931e-01, 9.99999999973925302e-01, 9.99999999976401099e-01, 9.99999999978644749e-01,
    9.99999999980678456e-01, 9.99999999982520871e-01, 9.99999999984189980e-01, 9.99999999985702215e-01,
    9.99999999987071120e-01, 9.99999999988311128e-01, 9.99999999989434118e-01, 9.99999999990450306e-01,
    9.99999999991369681e-01, 9.99999999992202127e-01, 9.99999999992955968e-01, 9.99999999993637090e-01,
    9.99999999994253597e-01, 9.99999999994811040e-01, 9.99999999995315303e-01, 9.99999999995770383e-01,
    9.99999999996182831e-01,
};

}  // namespace royroot
