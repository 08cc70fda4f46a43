// Generated by tests/oracles/generate_reference_values.py —
// do not edit by hand. Reference library versions:
//   Pillow 12.2.0, scikit-image 0.25.2, numpy 2.2.6
#ifndef SRTGAN_TESTS_ORACLE_DATA_H_
#define SRTGAN_TESTS_ORACLE_DATA_H_

namespace oracle {

// Pillow BICUBIC of the [0.1,0.9] index ramp (see generator script).
inline constexpr int kRampC = 3, kRampH = 13, kRampW = 17;
inline constexpr int kDownH = 7, kDownW = 9;

inline constexpr float kRampDown[] = {
    0.110238582f, 0.112419784f, 0.114743739f, 0.117027648f, 0.119317286f,
    0.121606916f, 0.123890825f, 0.126214772f, 0.12839599f, 0.146616876f,
    0.148798078f, 0.151122034f, 0.153405935f, 0.155695572f, 0.15798521f,
    0.160269111f, 0.162593067f, 0.164774269f, 0.185511425f, 0.187692627f,
    0.190016583f, 0.192300484f, 0.194590122f, 0.196879759f, 0.19916366f,
    0.201487616f, 0.203668818f, 0.223851815f, 0.226033017f, 0.228356972f,
    0.230640888f, 0.232930511f, 0.235220149f, 0.23750405f, 0.23982802f,
    0.242009208f, 0.26219219f, 0.264373422f, 0.266697347f, 0.268981278f,
    0.271270901f, 0.273560524f, 0.275844425f, 0.27816841f, 0.280349582f,
    0.301086783f, 0.303267956f, 0.305591911f, 0.307875842f, 0.310165435f,
    0.312455088f, 0.314739019f, 0.317062974f, 0.319244146f, 0.337465048f,
    0.33964625f, 0.341970205f, 0.344254106f, 0.346543759f, 0.348833382f,
    0.351117283f, 0.353441238f, 0.355622441f, 0.377308071f, 0.379489273f,
    0.381813228f, 0.384097129f, 0.386386752f, 0.388676405f, 0.390960306f,
    0.393284261f, 0.395465463f, 0.413686365f, 0.415867537f, 0.418191522f,
    0.420475423f, 0.422765076f, 0.425054699f, 0.4273386f, 0.429662585f,
    0.431843728f, 0.452580929f, 0.454762101f, 0.457086086f, 0.459369987f,
    0.46165961f, 0.463949263f, 0.466233164f, 0.468557119f, 0.470738322f,
    0.490921319f, 0.493102491f, 0.495426476f, 0.497710377f, 0.5f,
    0.502289653f, 0.504573524f, 0.506897449f, 0.509078681f, 0.529261649f,
    0.531442881f, 0.533766866f, 0.536050737f, 0.53834039f, 0.540629983f,
    0.542913914f, 0.545237899f, 0.547419071f, 0.568156242f, 0.570337474f,
    0.5726614f, 0.574945331f, 0.577234983f, 0.579524577f, 0.581808507f,
    0.584132433f, 0.586313665f, 0.604534507f, 0.606715739f, 0.609039664f,
    0.611323595f, 0.613613188f, 0.615902841f, 0.618186772f, 0.620510697f,
    0.622691929f, 0.644377589f, 0.646558762f, 0.648882747f, 0.651166618f,
    0.653456271f, 0.655745924f, 0.658029795f, 0.66035378f, 0.662535012f,
    0.680755794f, 0.682937026f, 0.685261011f, 0.687544882f, 0.689834535f,
    0.692124188f, 0.694408059f, 0.696732044f, 0.698913217f, 0.719650388f,
    0.72183162f, 0.724155545f, 0.726439476f, 0.728729129f, 0.731018722f,
    0.733302653f, 0.735626638f, 0.73780781f, 0.757990777f, 0.760172009f,
    0.762495935f, 0.764779866f, 0.767069459f, 0.769359112f, 0.771643043f,
    0.773966968f, 0.7761482f, 0.796331167f, 0.79851234f, 0.800836325f,
    0.803120255f, 0.805409849f, 0.807699502f, 0.809983432f, 0.812307358f,
    0.81448859f, 0.835225701f, 0.837406933f, 0.839730918f, 0.84201479f,
    0.844304442f, 0.846594095f, 0.848877966f, 0.851201892f, 0.853383124f,
    0.871603966f, 0.873785198f, 0.876109183f, 0.878393054f, 0.880682707f,
    0.8829723f, 0.885256231f, 0.887580216f, 0.889761388f,
};

inline constexpr float kRampUp[] = {
    0.106836274f, 0.10739179f, 0.108567409f, 0.109781824f, 0.11095237f,
    0.112107545f, 0.113247357f, 0.1143898f, 0.115534894f, 0.116679974f,
    0.117825061f, 0.118967503f, 0.120107315f, 0.121262491f, 0.122433029f,
    0.123647444f, 0.124823071f, 0.125378609f, 0.116098329f, 0.116653845f,
    0.117829464f, 0.119043879f, 0.120214425f, 0.1213696f, 0.122509412f,
    0.123651855f, 0.124796949f, 0.125942037f, 0.127087116f, 0.128229558f,
    0.129369378f, 0.130524546f, 0.131695092f, 0.132909507f, 0.134085119f,
    0.134640649f, 0.135699064f, 0.136254594f, 0.137430206f, 0.138644621f,
    0.139815167f, 0.140970334f, 0.142110139f, 0.143252596f, 0.144397676f,
    0.145542771f, 0.14668785f, 0.147830307f, 0.148970112f, 0.15012528f,
    0.151295826f, 0.152510241f, 0.153685853f, 0.154241383f, 0.155984119f,
    0.156539649f, 0.157715261f, 0.158929676f, 0.160100222f, 0.161255389f,
    0.162395194f, 0.163537651f, 0.164682731f, 0.165827826f, 0.166972905f,
    0.168115363f, 0.169255167f, 0.170410335f, 0.171580881f, 0.172795296f,
    0.173970908f, 0.174526438f, 0.175575316f, 0.176130846f, 0.177306458f,
    0.178520873f, 0.179691419f, 0.180846587f, 0.181986392f, 0.183128849f,
    0.184273928f, 0.185419023f, 0.186564103f, 0.18770656f, 0.188846365f,
    0.190001532f, 0.191172078f, 0.192386493f, 0.193562105f, 0.194117635f,
    0.194943026f, 0.195498556f, 0.196674168f, 0.197888583f, 0.199059129f,
    0.200214297f, 0.201354101f, 0.202496558f, 0.203641638f, 0.204786733f,
    0.205931813f, 0.20707427f, 0.208214074f, 0.209369242f, 0.210539788f,
    0.211754203f, 0.212929815f, 0.213485345f, 0.214087248f, 0.214642778f,
    0.21581839f, 0.217032805f, 0.218203351f, 0.219358519f, 0.220498323f,
    0.221640781f, 0.22278586f, 0.223930955f, 0.225076035f, 0.226218492f,
    0.227358282f, 0.228513464f, 0.22968401f, 0.230898425f, 0.232074037f,
    0.232629567f, 0.233231455f, 0.233786985f, 0.234962597f, 0.236177012f,
    0.237347558f, 0.238502741f, 0.239642546f, 0.240785003f, 0.241930082f,
    0.243075162f, 0.244220242f, 0.245362699f, 0.246502489f, 0.247657672f,
    0.248828232f, 0.250042647f, 0.251218259f, 0.251773775f, 0.252375662f,
    0.252931207f, 0.25410682f, 0.255321234f, 0.25649178f, 0.257646948f,
    0.258786768f, 0.25992921f, 0.261074305f, 0.262219369f, 0.263364464f,
    0.264506906f, 0.265646696f, 0.266801894f, 0.26797244f, 0.269186854f,
    0.270362467f, 0.270917982f, 0.271743387f, 0.272298932f, 0.273474544f,
    0.274688929f, 0.275859475f, 0.277014673f, 0.278154492f, 0.279296935f,
    0.280441999f, 0.281587064f, 0.282732159f, 0.283874631f, 0.285014421f,
    0.286169618f, 0.287340164f, 0.288554579f, 0.289730191f, 0.290285707f,
    0.291334599f, 0.291890144f, 0.293065757f, 0.294280142f, 0.295450687f,
    0.296605885f, 0.297745705f, 0.298888147f, 0.300033212f, 0.301178277f,
    0.302323371f, 0.303465843f, 0.304605633f, 0.305760831f, 0.306931376f,
    0.308145791f, 0.309321404f, 0.309876919f, 0.311619669f, 0.312175184f,
    0.313350797f, 0.314565182f, 0.315735728f, 0.316890925f, 0.318030745f,
    0.319173187f, 0.320318252f, 0.321463317f, 0.322608411f, 0.323750883f,
    0.324890703f, 0.326045901f, 0.327216446f, 0.328430831f, 0.329606444f,
    0.330161959f, 0.331220388f, 0.331775904f, 0.332951546f, 0.334165931f,
    0.335336477f, 0.336491674f, 0.337631464f, 0.338773906f, 0.339919031f,
    0.341064095f, 0.34220919f, 0.343351632f, 0.344491422f, 0.34564662f,
    0.346817166f, 0.348031551f, 0.349207193f, 0.349762708f, 0.340482444f,
    0.341037959f, 0.342213601f, 0.343427986f, 0.344598532f, 0.345753729f,
    0.346893519f, 0.348035961f, 0.349181086f, 0.350326151f, 0.351471245f,
    0.352613688f, 0.353753477f, 0.354908675f, 0.356079221f, 0.357293606f,
    0.358469248f, 0.359024763f, 0.373905748f, 0.374461263f, 0.375636905f,
    0.37685129f, 0.378021836f, 0.379177034f, 0.380316824f, 0.381459266f,
    0.382604361f, 0.383749425f, 0.38489455f, 0.386036992f, 0.387176782f,
    0.38833198f, 0.389502525f, 0.39071691f, 0.391892552f, 0.392448068f,
    0.383167803f, 0.383723319f, 0.384898961f, 0.386113346f, 0.387283891f,
    0.388439089f, 0.389578879f, 0.390721321f, 0.391866416f, 0.393011481f,
    0.394156605f, 0.395299047f, 0.396438837f, 0.397594035f, 0.39876458f,
    0.399978966f, 0.401154608f, 0.401710123f, 0.402768552f, 0.403324068f,
    0.40449968f, 0.405714095f, 0.40688464f, 0.408039838f, 0.409179628f,
    0.41032207f, 0.411467195f, 0.412612259f, 0.413757354f, 0.414899796f,
    0.416039586f, 0.417194784f, 0.41836533f, 0.419579744f, 0.420755327f,
    0.421310842f, 0.423053592f, 0.423609108f, 0.42478472f, 0.425999135f,
    0.427169681f, 0.428324878f, 0.429464668f, 0.43060711f, 0.431752235f,
    0.4328973f, 0.434042394f, 0.435184836f, 0.436324626f, 0.437479824f,
    0.438650399f, 0.439864784f, 0.441040397f, 0.441595912f, 0.442644805f,
    0.44320032f, 0.444375932f, 0.445590347f, 0.446760893f, 0.44791609f,
    0.44905588f, 0.450198323f, 0.451343447f, 0.452488482f, 0.453633606f,
    0.454776049f, 0.455915838f, 0.457071036f, 0.458241612f, 0.459455997f,
    0.460631609f, 0.461187124f, 0.462012529f, 0.462568045f, 0.463743657f,
    0.464958072f, 0.466128618f, 0.467283815f, 0.468423605f, 0.469566047f,
    0.470711142f, 0.471856207f, 0.473001331f, 0.474143773f, 0.475283563f,
    0.476438761f, 0.477609277f, 0.478823692f, 0.479999334f, 0.480554849f,
    0.481156737f, 0.481712252f, 0.482887864f, 0.484102279f, 0.485272825f,
    0.486428022f, 0.487567812f, 0.488710254f, 0.489855349f, 0.491000444f,
    0.492145538f, 0.493287981f, 0.49442777f, 0.495582938f, 0.496753454f,
    0.497967869f, 0.499143541f, 0.499699056f, 0.500300944f, 0.500856459f,
    0.502032101f, 0.503246486f, 0.504417062f, 0.505572259f, 0.506712019f,
    0.507854462f, 0.508999586f, 0.510144651f, 0.511289716f, 0.512432158f,
    0.513571978f, 0.514727116f, 0.515897632f, 0.517112136f, 0.518287718f,
    0.518843234f, 0.519445121f, 0.520000637f, 0.521176279f, 0.522390723f,
    0.523561299f, 0.524716437f, 0.525856256f, 0.526998699f, 0.528143764f,
    0.529288888f, 0.530433893f, 0.531576335f, 0.532716155f, 0.533871353f,
    0.535041928f, 0.536256373f, 0.537431955f, 0.537987471f, 0.538812816f,
    0.539368331f, 0.540543973f, 0.541758418f, 0.542928994f, 0.544084132f,
    0.545223951f, 0.546366394f, 0.547511458f, 0.548656583f, 0.549801588f,
    0.55094403f, 0.55208391f, 0.553239048f, 0.554409623f, 0.555624068f,
    0.55679965f, 0.557355165f, 0.558404088f, 0.558959603f, 0.560135245f,
    0.56134969f, 0.562520206f, 0.563675344f, 0.564815164f, 0.565957665f,
    0.56710273f, 0.568247855f, 0.56939286f, 0.570535302f, 0.571675122f,
    0.572830319f, 0.574000835f, 0.57521528f, 0.576390922f, 0.576946437f,
    0.578689158f, 0.579244673f, 0.580420315f, 0.58163476f, 0.582805216f,
    0.583960354f, 0.585100234f, 0.586242735f, 0.587387741f, 0.588532865f,
    0.58967793f, 0.590820372f, 0.591960251f, 0.593115389f, 0.594285846f,
    0.59550029f, 0.596675992f, 0.597231507f, 0.598289847f, 0.598845363f,
    0.600021005f, 0.601235449f, 0.602405965f, 0.603561103f, 0.604700983f,
    0.605843425f, 0.60698843f, 0.608133554f, 0.609278619f, 0.610421121f,
    0.611560941f, 0.612716079f, 0.613886595f, 0.615101039f, 0.616276681f,
    0.616832197f, 0.607551873f, 0.608107388f, 0.60928303f, 0.610497475f,
    0.611667991f, 0.612823129f, 0.613963008f, 0.61510545f, 0.616250455f,
    0.61739558f, 0.618540645f, 0.619683146f, 0.620822966f, 0.621978104f,
    0.62314862f, 0.624363065f, 0.625538707f, 0.626094222f, 0.640975296f,
    0.641530812f, 0.642706394f, 0.643920839f, 0.645091414f, 0.646246552f,
    0.647386372f, 0.648528814f, 0.649673879f, 0.650819004f, 0.651964068f,
    0.653106511f, 0.65424633f, 0.655401468f, 0.656572044f, 0.657786489f,
    0.658962131f, 0.659517646f, 0.650237322f, 0.650792837f, 0.65196842f,
    0.653182864f, 0.65435344f, 0.655508578f, 0.656648397f, 0.65779084f,
    0.658935905f, 0.660081029f, 0.661226094f, 0.662368536f, 0.663508356f,
    0.664663494f, 0.665834069f, 0.667048514f, 0.668224156f, 0.668779671f,
    0.669838011f, 0.670393527f, 0.671569109f, 0.672783554f, 0.673954189f,
    0.675109327f, 0.676249146f, 0.677391529f, 0.678536594f, 0.679681718f,
    0.680826843f, 0.681969285f, 0.683109105f, 0.684264183f, 0.685434759f,
    0.686649203f, 0.687824845f, 0.688380361f, 0.690123022f, 0.690678537f,
    0.691854179f, 0.693068624f, 0.694239199f, 0.695394337f, 0.696534157f,
    0.697676599f, 0.698821664f, 0.699966788f, 0.701111853f, 0.702254295f,
    0.703394115f, 0.704549253f, 0.705719829f, 0.706934273f, 0.708109856f,
    0.708665371f, 0.709714293f, 0.710269809f, 0.711445451f, 0.712659895f,
    0.713830411f, 0.714985549f, 0.716125369f, 0.717267871f, 0.718412936f,
    0.71955806f, 0.720703065f, 0.721845508f, 0.722985327f, 0.724140525f,
    0.7253111f, 0.726525545f, 0.727701128f, 0.728256643f, 0.729081988f,
    0.729637504f, 0.730813146f, 0.73202759f, 0.733198106f, 0.734353244f,
    0.735493064f, 0.736635566f, 0.737780631f, 0.738925755f, 0.74007076f,
    0.741213202f, 0.742353022f, 0.74350822f, 0.744678795f, 0.74589324f,
    0.747068822f, 0.747624338f, 0.748226225f, 0.748781741f, 0.749957383f,
    0.751171827f, 0.752342343f, 0.753497481f, 0.754637301f, 0.755779803f,
    0.756924808f, 0.758069932f, 0.759214997f, 0.76035744f, 0.761497259f,
    0.762652457f, 0.763822973f, 0.765037417f, 0.766213059f, 0.766768575f,
    0.767370403f, 0.767925918f, 0.76910156f, 0.770316005f, 0.771486521f,
    0.772641718f, 0.773781538f, 0.77492398f, 0.776068985f, 0.77721411f,
    0.778359175f, 0.779501677f, 0.780641496f, 0.781796634f, 0.78296715f,
    0.784181595f, 0.785357237f, 0.785912752f, 0.78651464f, 0.787070155f,
    0.788245738f, 0.789460182f, 0.790630758f, 0.791785955f, 0.792925775f,
    0.794068217f, 0.795213223f, 0.796358347f, 0.797503412f, 0.798645914f,
    0.799785733f, 0.800940871f, 0.802111387f, 0.803325832f, 0.804501474f,
    0.805056989f, 0.805882335f, 0.80643785f, 0.807613432f, 0.808827877f,
    0.809998453f, 0.81115365f, 0.81229347f, 0.813435912f, 0.814580917f,
    0.815726042f, 0.816871107f, 0.818013608f, 0.819153428f, 0.820308566f,
    0.821479082f, 0.822693527f, 0.823869169f, 0.824424684f, 0.825473547f,
    0.826029062f, 0.827204704f, 0.828419149f, 0.829589725f, 0.830744863f,
    0.831884682f, 0.833027124f, 0.834172189f, 0.835317314f, 0.836462379f,
    0.837604821f, 0.83874464f, 0.839899778f, 0.841070294f, 0.842284739f,
    0.843460381f, 0.844015896f, 0.845758557f, 0.846314073f, 0.847489774f,
    0.848704219f, 0.849874794f, 0.851029873f, 0.852169693f, 0.853312135f,
    0.854457259f, 0.855602384f, 0.856747389f, 0.857889831f, 0.859029651f,
    0.860184789f, 0.861355364f, 0.862569809f, 0.863745391f, 0.864300907f,
    0.865359306f, 0.865914822f, 0.867090464f, 0.868304908f, 0.869475484f,
    0.870630622f, 0.871770442f, 0.872912884f, 0.874057949f, 0.875203073f,
    0.876348078f, 0.87749052f, 0.87863034f, 0.879785538f, 0.880956113f,
    0.882170558f, 0.88334614f, 0.883901656f, 0.874621332f, 0.875176847f,
    0.876352489f, 0.877566934f, 0.878737509f, 0.879892647f, 0.881032467f,
    0.882174909f, 0.883319974f, 0.884465098f, 0.885610104f, 0.886752546f,
    0.887892365f, 0.889047563f, 0.890218139f, 0.891432583f, 0.892608166f,
    0.893163681f,
};

// scikit-image SSIM per noisy pair (channel-averaged).
inline constexpr double kSsimRef[] = {
    0.99837599075753791, 0.99504408505904873, 0.98994056105239991,
    0.98312241937141598, 0.97466400421749555, 0.96465478045226905,
    0.95319725006827571, 0.94040411420775349, 0.92639595395969343,
    0.91132682547089383,
};

}  // namespace oracle

#endif  // SRTGAN_TESTS_ORACLE_DATA_H_
