"""Xiao-Gimbutas symmetric simplex rules in barycentric coordinates.

Reference simplex volume is 1/2 (triangle) or 1/6 (tetrahedron); each
entry maps degree -> (barycentric points, weights).
"""

# fmt: off
TRIANGLE = {
    1: (
        [
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
        ],
        [0.5000000000000009],
    ),
    2: (
        [
            (0.6666666666666667, 0.16666666666666669, 0.1666666666666666),
            (0.16666666666666663, 0.6666666666666667, 0.1666666666666666),
            (0.16666666666666652, 0.16666666666666657, 0.6666666666666669),
        ],
        [0.16666666666666674, 0.16666666666666674, 0.16666666666666674],
    ),
    3: (
        [
            (0.445948490915965, 0.44594849091596495, 0.10810301816807007),
            (0.10810301816807022, 0.44594849091596517, 0.44594849091596467),
            (0.4459484909159648, 0.10810301816806983, 0.44594849091596533),
            (0.8168475729804583, 0.0915762135097713, 0.0915762135097704),
            (0.09157621350977052, 0.8168475729804585, 0.09157621350977097),
            (0.09157621350977063, 0.09157621350977063, 0.8168475729804587),
        ],
        [0.11169079483900565, 0.11169079483900565, 0.11169079483900565, 0.054975871827660824, 0.054975871827660824, 0.054975871827660824],
    ),
    4: (
        [
            (0.445948490915965, 0.44594849091596495, 0.10810301816807007),
            (0.10810301816807022, 0.44594849091596517, 0.44594849091596467),
            (0.4459484909159648, 0.10810301816806983, 0.44594849091596533),
            (0.8168475729804583, 0.0915762135097713, 0.0915762135097704),
            (0.09157621350977052, 0.8168475729804585, 0.09157621350977097),
            (0.09157621350977063, 0.09157621350977063, 0.8168475729804587),
        ],
        [0.11169079483900565, 0.11169079483900565, 0.11169079483900565, 0.054975871827660824, 0.054975871827660824, 0.054975871827660824],
    ),
    5: (
        [
            (0.7974269853530875, 0.10128650732345656, 0.1012865073234559),
            (0.10128650732345634, 0.7974269853530872, 0.10128650732345647),
            (0.10128650732345623, 0.10128650732345601, 0.7974269853530878),
            (0.47014206410511494, 0.470142064105115, 0.059715871789770045),
            (0.05971587178976989, 0.47014206410511483, 0.47014206410511533),
            (0.47014206410511483, 0.059715871789769864, 0.47014206410511533),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
        ],
        [0.06296959027241374, 0.06296959027241374, 0.06296959027241374, 0.06619707639425326, 0.06619707639425326, 0.06619707639425326, 0.1125000000000002],
    ),
    6: (
        [
            (0.5611400349004342, 0.21942998254978313, 0.21942998254978271),
            (0.21942998254978285, 0.5611400349004338, 0.2194299825497833),
            (0.21942998254978296, 0.2194299825497829, 0.5611400349004342),
            (0.4801379641122151, 0.4801379641122151, 0.03972407177556983),
            (0.039724071775570025, 0.48013796411221493, 0.4801379641122151),
            (0.480137964112215, 0.03972407177556997, 0.4801379641122151),
            (0.8390092597147911, 0.1416190159239681, 0.019371724361240746),
            (0.019371724361240905, 0.8390092597147909, 0.1416190159239682),
            (0.14161901592396764, 0.019371724361240628, 0.8390092597147918),
            (0.14161901592396808, 0.8390092597147911, 0.019371724361240746),
            (0.019371724361240128, 0.14161901592396808, 0.8390092597147918),
            (0.8390092597147909, 0.019371724361240905, 0.1416190159239682),
        ],
        [0.08566656207649068, 0.08566656207649068, 0.08566656207649068, 0.040365544796515586, 0.040365544796515586, 0.040365544796515586, 0.020317279896830343, 0.020317279896830343, 0.020317279896830343, 0.020317279896830343, 0.020317279896830343, 0.020317279896830343],
    ),
    7: (
        [
            (0.4731956536892512, 0.47319565368925115, 0.05360869262149768),
            (0.05360869262149803, 0.473195653689251, 0.47319565368925093),
            (0.47319565368925076, 0.05360869262149778, 0.4731956536892515),
            (0.8844047198909869, 0.05779764005450692, 0.0577976400545062),
            (0.05779764005450605, 0.8844047198909871, 0.05779764005450678),
            (0.05779764005450616, 0.057797640054506216, 0.8844047198909876),
            (0.6936897820041288, 0.2593390118657858, 0.04697120613008546),
            (0.04697120613008565, 0.6936897820041287, 0.2593390118657857),
            (0.25933901186578556, 0.04697120613008554, 0.6936897820041289),
            (0.2593390118657858, 0.6936897820041288, 0.04697120613008546),
            (0.04697120613008554, 0.2593390118657855, 0.6936897820041289),
            (0.6936897820041287, 0.04697120613008565, 0.2593390118657857),
            (0.5166727872055052, 0.24166360639724727, 0.24166360639724746),
            (0.24166360639724727, 0.5166727872055052, 0.24166360639724746),
            (0.24166360639724715, 0.24166360639724715, 0.5166727872055057),
        ],
        [0.026590416648380237, 0.026590416648380237, 0.026590416648380237, 0.02045908519702843, 0.02045908519702843, 0.02045908519702843, 0.027877270270345547, 0.027877270270345547, 0.027877270270345547, 0.027877270270345547, 0.027877270270345547, 0.027877270270345547, 0.06386262428056681, 0.06386262428056681, 0.06386262428056681],
    ),
    8: (
        [
            (0.6588613844964794, 0.17056930775176038, 0.17056930775176027),
            (0.17056930775176038, 0.6588613844964794, 0.17056930775176027),
            (0.17056930775175994, 0.17056930775175994, 0.6588613844964801),
            (0.459292588292723, 0.459292588292723, 0.08141482341455396),
            (0.08141482341455397, 0.459292588292723, 0.45929258829272307),
            (0.4592925882927227, 0.08141482341455367, 0.4592925882927236),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.8989055433659381, 0.050547228317031054, 0.05054722831703087),
            (0.05054722831703107, 0.8989055433659381, 0.05054722831703087),
            (0.050547228317030846, 0.050547228317030846, 0.8989055433659383),
            (0.7284923929554044, 0.2631128296346383, 0.008394777409957421),
            (0.00839477740995731, 0.7284923929554044, 0.26311282963463833),
            (0.26311282963463756, 0.008394777409957532, 0.7284923929554049),
            (0.2631128296346382, 0.7284923929554044, 0.008394777409957421),
            (0.00839477740995731, 0.2631128296346384, 0.7284923929554042),
            (0.7284923929554044, 0.00839477740995731, 0.26311282963463833),
        ],
        [0.05160868526735919, 0.05160868526735919, 0.05160868526735919, 0.04754581713364242, 0.04754581713364242, 0.04754581713364242, 0.07215780383889374, 0.016229248811599036, 0.016229248811599036, 0.016229248811599036, 0.013615157087217505, 0.013615157087217505, 0.013615157087217505, 0.013615157087217505, 0.013615157087217505, 0.013615157087217505],
    ),
    9: (
        [
            (0.4896825191987376, 0.4896825191987376, 0.020634961602524718),
            (0.02063496160252465, 0.4896825191987376, 0.48968251919873773),
            (0.4896825191987374, 0.0206349616025244, 0.48968251919873823),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.6235929287619346, 0.18820353561903258, 0.18820353561903283),
            (0.18820353561903258, 0.6235929287619346, 0.18820353561903283),
            (0.18820353561903258, 0.18820353561903252, 0.623592928761935),
            (0.741198598784498, 0.2219629891607659, 0.03683841205473612),
            (0.03683841205473626, 0.7411985987844982, 0.22196298916076546),
            (0.2219629891607653, 0.03683841205473626, 0.7411985987844985),
            (0.22196298916076584, 0.741198598784498, 0.03683841205473612),
            (0.036838412054735814, 0.22196298916076573, 0.7411985987844985),
            (0.741198598784498, 0.036838412054735994, 0.22196298916076604),
            (0.4370895914929367, 0.43708959149293675, 0.1258208170141265),
            (0.12582081701412662, 0.43708959149293664, 0.4370895914929368),
            (0.4370895914929367, 0.12582081701412656, 0.4370895914929368),
            (0.9105409732110946, 0.04472951339445265, 0.04472951339445272),
            (0.044729513394452636, 0.9105409732110946, 0.04472951339445272),
            (0.044729513394452414, 0.044729513394452414, 0.9105409732110952),
        ],
        [0.015667350113569536, 0.015667350113569536, 0.015667350113569536, 0.04856789814139952, 0.03982386946360524, 0.03982386946360524, 0.03982386946360524, 0.021641769688644702, 0.021641769688644702, 0.021641769688644702, 0.021641769688644702, 0.021641769688644702, 0.021641769688644702, 0.038913770502387084, 0.038913770502387084, 0.038913770502387084, 0.012788837829349035, 0.012788837829349035, 0.012788837829349035],
    ),
    10: (
        [
            (0.49517345980117045, 0.49517345980117045, 0.009653080397659119),
            (0.009653080397659108, 0.4951734598011701, 0.4951734598011708),
            (0.4951734598011701, 0.009653080397659108, 0.4951734598011708),
            (0.9617211695143175, 0.019139415242841545, 0.019139415242840963),
            (0.01913941524284113, 0.9617211695143173, 0.01913941524284154),
            (0.019139415242842128, 0.019139415242842073, 0.9617211695143159),
            (0.8315416244168032, 0.13373475510086916, 0.03472362048232762),
            (0.034723620482327466, 0.8315416244168032, 0.13373475510086932),
            (0.13373475510086874, 0.03472362048232752, 0.8315416244168037),
            (0.13373475510086918, 0.8315416244168032, 0.03472362048232762),
            (0.03472362048232713, 0.13373475510086918, 0.8315416244168037),
            (0.8315416244168033, 0.03472362048232734, 0.13373475510086932),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.6357241363774713, 0.3266931362813372, 0.037582727341191516),
            (0.0375827273411915, 0.6357241363774715, 0.32669313628133695),
            (0.32669313628133667, 0.03758272734119161, 0.6357241363774717),
            (0.3266931362813372, 0.6357241363774713, 0.037582727341191516),
            (0.03758272734119161, 0.32669313628133667, 0.6357241363774717),
            (0.6357241363774714, 0.03758272734119139, 0.3266931362813372),
            (0.6310299746295068, 0.1844850126852467, 0.1844850126852465),
            (0.18448501268524664, 0.6310299746295068, 0.1844850126852465),
            (0.18448501268524642, 0.18448501268524642, 0.6310299746295072),
            (0.4282348209437188, 0.42823482094371884, 0.14353035811256235),
            (0.14353035811256198, 0.4282348209437191, 0.42823482094371884),
            (0.4282348209437191, 0.14353035811256207, 0.42823482094371884),
        ],
        [0.004896295249209142, 0.004896295249209142, 0.004896295249209142, 0.0031926796150593276, 0.0031926796150593276, 0.0031926796150593276, 0.014481140731628182, 0.014481140731628182, 0.014481140731628182, 0.014481140731628182, 0.014481140731628182, 0.014481140731628182, 0.04180743718698704, 0.01936952454300945, 0.01936952454300945, 0.01936952454300945, 0.01936952454300945, 0.01936952454300945, 0.01936952454300945, 0.03931688487318867, 0.03931688487318867, 0.03931688487318867, 0.03762366398427206, 0.03762366398427206, 0.03762366398427206],
    ),
    11: (
        [
            (0.9383062087288241, 0.03084689563558808, 0.030846895635587814),
            (0.030846895635587734, 0.9383062087288239, 0.03084689563558839),
            (0.030846895635586624, 0.030846895635586624, 0.9383062087288268),
            (0.4987801651784607, 0.49878016517846063, 0.002439669643078697),
            (0.0024396696430781795, 0.49878016517846113, 0.49878016517846063),
            (0.49878016517846036, 0.0024396696430783182, 0.4987801651784613),
            (0.8263297175927505, 0.15930361983769362, 0.014366662569555821),
            (0.014366662569555655, 0.8263297175927506, 0.15930361983769367),
            (0.15930361983769348, 0.014366662569555433, 0.8263297175927511),
            (0.1593036198376936, 0.8263297175927505, 0.014366662569555821),
            (0.014366662569555433, 0.15930361983769348, 0.8263297175927511),
            (0.8263297175927506, 0.014366662569555669, 0.15930361983769367),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.7735843454266123, 0.11320782728669415, 0.11320782728669367),
            (0.11320782728669398, 0.7735843454266118, 0.11320782728669423),
            (0.11320782728669398, 0.11320782728669376, 0.7735843454266123),
            (0.43665501639317594, 0.43665501639317594, 0.12668996721364809),
            (0.1266899672136479, 0.43665501639317605, 0.436655016393176),
            (0.4366550163931757, 0.12668996721364767, 0.4366550163931766),
            (0.5710330827614615, 0.21448345861926954, 0.214483458619269),
            (0.2144834586192692, 0.5710330827614611, 0.2144834586192696),
            (0.2144834586192692, 0.21448345861926926, 0.5710330827614615),
            (0.6417047167143861, 0.31063121631346313, 0.04766406697215074),
            (0.047664066972150865, 0.6417047167143859, 0.3106312163134632),
            (0.3106312163134626, 0.0476640669721507, 0.6417047167143867),
            (0.31063121631346313, 0.6417047167143861, 0.04766406697215074),
            (0.04766406697215064, 0.31063121631346263, 0.6417047167143867),
            (0.6417047167143858, 0.047664066972150754, 0.31063121631346347),
        ],
        [0.006124648475353978, 0.006124648475353978, 0.006124648475353978, 0.006232745936940685, 0.006232745936940685, 0.006232745936940685, 0.007278811668904613, 0.007278811668904613, 0.007278811668904613, 0.007278811668904613, 0.007278811668904613, 0.007278811668904613, 0.040722567354675686, 0.020064621190654167, 0.020064621190654167, 0.020064621190654167, 0.03154743607994947, 0.03154743607994947, 0.03154743607994947, 0.03392255387184767, 0.03392255387184767, 0.03392255387184767, 0.02032142432794326, 0.02032142432794326, 0.02032142432794326, 0.02032142432794326, 0.02032142432794326, 0.02032142432794326],
    ),
    12: (
        [
            (0.45707498597014795, 0.2714625070149259, 0.27146250701492614),
            (0.2714625070149259, 0.45707498597014795, 0.27146250701492614),
            (0.27146250701492614, 0.2714625070149261, 0.45707498597014784),
            (0.7814843446812914, 0.10925782765935435, 0.10925782765935427),
            (0.10925782765935432, 0.7814843446812914, 0.10925782765935427),
            (0.10925782765935421, 0.10925782765935421, 0.7814843446812916),
            (0.4401116486585932, 0.44011164865859315, 0.11977670268281368),
            (0.11977670268281382, 0.44011164865859276, 0.4401116486585935),
            (0.44011164865859276, 0.11977670268281379, 0.4401116486585935),
            (0.6282497516835562, 0.2554542286385172, 0.11629601967792658),
            (0.11629601967792635, 0.6282497516835562, 0.25545422863851747),
            (0.2554542286385172, 0.11629601967792624, 0.6282497516835566),
            (0.2554542286385172, 0.6282497516835562, 0.11629601967792658),
            (0.11629601967792624, 0.2554542286385172, 0.6282497516835566),
            (0.6282497516835562, 0.11629601967792627, 0.25545422863851747),
            (0.8513377925102402, 0.12727971723358925, 0.021382490256170505),
            (0.021382490256170894, 0.8513377925102398, 0.12727971723358936),
            (0.12727971723358888, 0.02138249025617084, 0.8513377925102403),
            (0.12727971723358933, 0.8513377925102402, 0.021382490256170505),
            (0.02138249025617034, 0.12727971723358933, 0.8513377925102403),
            (0.8513377925102403, 0.021382490256170325, 0.12727971723358936),
            (0.6853101639063921, 0.2916556797383411, 0.023034156355266854),
            (0.023034156355267066, 0.685310163906392, 0.29165567973834094),
            (0.29165567973834094, 0.02303415635526701, 0.685310163906392),
            (0.29165567973834117, 0.685310163906392, 0.023034156355266854),
            (0.023034156355266955, 0.291655679738341, 0.685310163906392),
            (0.6853101639063919, 0.023034156355266844, 0.2916556797383413),
            (0.4882037509455416, 0.4882037509455415, 0.023592498108916914),
            (0.023592498108916615, 0.4882037509455416, 0.48820375094554186),
            (0.4882037509455416, 0.023592498108916532, 0.48820375094554186),
            (0.9507072731273288, 0.02464636343633582, 0.024646363436335385),
            (0.02464636343633586, 0.9507072731273287, 0.024646363436335385),
            (0.024646363436335417, 0.02464636343633536, 0.9507072731273293),
        ],
        [0.03127060659795147, 0.03127060659795147, 0.03127060659795147, 0.014243026034438765, 0.014243026034438765, 0.014243026034438765, 0.02495916746403046, 0.02495916746403046, 0.02495916746403046, 0.021613681829707104, 0.021613681829707104, 0.021613681829707104, 0.021613681829707104, 0.021613681829707104, 0.021613681829707104, 0.00754183878825572, 0.00754183878825572, 0.00754183878825572, 0.00754183878825572, 0.00754183878825572, 0.00754183878825572, 0.010891792519303771, 0.010891792519303771, 0.010891792519303771, 0.010891792519303771, 0.010891792519303771, 0.010891792519303771, 0.012133419040726024, 0.012133419040726024, 0.012133419040726024, 0.003965821254986826, 0.003965821254986826, 0.003965821254986826],
    ),
    13: (
        [
            (0.496135894741046, 0.496135894741046, 0.007728210517907946),
            (0.00772821051790773, 0.4961358947410458, 0.4961358947410464),
            (0.4961358947410458, 0.007728210517907813, 0.4961358947410464),
            (0.4696086896534918, 0.46960868965349184, 0.06078262069301636),
            (0.06078262069301621, 0.469608689653492, 0.46960868965349184),
            (0.4696086896534918, 0.060782620693015765, 0.46960868965349245),
            (0.5377794301018355, 0.2311102849490825, 0.23111028494908198),
            (0.23111028494908215, 0.5377794301018353, 0.23111028494908256),
            (0.23111028494908226, 0.2311102849490822, 0.5377794301018356),
            (0.6889333070396046, 0.29207868857663666, 0.018988004383758725),
            (0.018988004383758805, 0.6889333070396048, 0.29207868857663644),
            (0.2920786885766362, 0.018988004383759083, 0.6889333070396048),
            (0.29207868857663666, 0.6889333070396046, 0.018988004383758725),
            (0.018988004383758694, 0.2920786885766366, 0.6889333070396048),
            (0.6889333070396046, 0.01898800438375864, 0.29207868857663677),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.6355187156236323, 0.26674525331035126, 0.0977360310660165),
            (0.09773603106601636, 0.6355187156236323, 0.26674525331035137),
            (0.2667452533103506, 0.09773603106601658, 0.6355187156236328),
            (0.26674525331035126, 0.6355187156236323, 0.0977360310660165),
            (0.09773603106601647, 0.2667452533103513, 0.6355187156236323),
            (0.6355187156236324, 0.0977360310660163, 0.26674525331035137),
            (0.4144775702790544, 0.4144775702790544, 0.17104485944189118),
            (0.17104485944189052, 0.41447757027905474, 0.4144775702790547),
            (0.41447757027905463, 0.17104485944189066, 0.4144775702790547),
            (0.7728801748557336, 0.1135599125721336, 0.11355991257213281),
            (0.11355991257213283, 0.7728801748557338, 0.1135599125721334),
            (0.11355991257213305, 0.11355991257213305, 0.7728801748557339),
            (0.8512338800096334, 0.12679977578383744, 0.021966344206529126),
            (0.021966344206529542, 0.8512338800096333, 0.1267997757838372),
            (0.12679977578383705, 0.021966344206529154, 0.8512338800096337),
            (0.1267997757838375, 0.8512338800096334, 0.021966344206529126),
            (0.021966344206529098, 0.12679977578383717, 0.8512338800096337),
            (0.8512338800096331, 0.021966344206529126, 0.12679977578383778),
            (0.9502081370175673, 0.02489593149121634, 0.02489593149121636),
            (0.024895931491216272, 0.9502081370175673, 0.02489593149121636),
            (0.024895931491216272, 0.024895931491216328, 0.9502081370175673),
        ],
        [0.004970738180536301, 0.004970738180536301, 0.004970738180536301, 0.016390620801861475, 0.016390620801861475, 0.016390620801861475, 0.023031204796389138, 0.023031204796389138, 0.023031204796389138, 0.009062749323100434, 0.009062749323100434, 0.009062749323100434, 0.009062749323100434, 0.009062749323100434, 0.009062749323100434, 0.025811323332145406, 0.01860598022863078, 0.01860598022863078, 0.01860598022863078, 0.01860598022863078, 0.01860598022863078, 0.01860598022863078, 0.023473547771077588, 0.023473547771077588, 0.023473547771077588, 0.015451548987879902, 0.015451548987879902, 0.015451548987879902, 0.0076965363418910766, 0.0076965363418910766, 0.0076965363418910766, 0.0076965363418910766, 0.0076965363418910766, 0.0076965363418910766, 0.004014699897629204, 0.004014699897629204, 0.004014699897629204],
    ),
    14: (
        [
            (0.4176447193404539, 0.4176447193404539, 0.16471056131909223),
            (0.1647105613190919, 0.4176447193404539, 0.4176447193404542),
            (0.4176447193404539, 0.1647105613190919, 0.4176447193404542),
            (0.6869801678080876, 0.2983728821362577, 0.014646950055654669),
            (0.014646950055654528, 0.6869801678080876, 0.29837288213625784),
            (0.29837288213625734, 0.014646950055654417, 0.6869801678080882),
            (0.2983728821362577, 0.6869801678080877, 0.014646950055654669),
            (0.014646950055654417, 0.29837288213625734, 0.6869801678080882),
            (0.6869801678080876, 0.014646950055654473, 0.298372882136258),
            (0.8764002338182548, 0.06179988309087279, 0.06179988309087241),
            (0.061799883090872476, 0.8764002338182545, 0.06179988309087299),
            (0.061799883090872365, 0.061799883090872365, 0.8764002338182553),
            (0.570222290846683, 0.3368614597963449, 0.09291624935697214),
            (0.09291624935697196, 0.570222290846683, 0.33686145979634513),
            (0.33686145979634485, 0.0929162493569719, 0.5702222908466832),
            (0.33686145979634485, 0.570222290846683, 0.09291624935697214),
            (0.09291624935697185, 0.33686145979634496, 0.5702222908466832),
            (0.5702222908466829, 0.09291624935697188, 0.33686145979634524),
            (0.4530449433823226, 0.27347752830883854, 0.27347752830883887),
            (0.27347752830883854, 0.4530449433823226, 0.27347752830883887),
            (0.2734775283088384, 0.2734775283088385, 0.45304494338232304),
            (0.6455889351749133, 0.17720553241254328, 0.17720553241254344),
            (0.17720553241254333, 0.6455889351749132, 0.17720553241254344),
            (0.1772055324125431, 0.1772055324125431, 0.6455889351749138),
            (0.9612180775025982, 0.01939096124870117, 0.019390961248700628),
            (0.019390961248700767, 0.961218077502598, 0.019390961248701204),
            (0.019390961248701766, 0.019390961248701766, 0.9612180775025965),
            (0.4889639103621787, 0.4889639103621787, 0.022072179275642593),
            (0.022072179275642645, 0.48896391036217857, 0.4889639103621788),
            (0.48896391036217857, 0.022072179275642645, 0.4889639103621788),
            (0.7706085547749966, 0.17226668782135549, 0.05712475740364801),
            (0.05712475740364764, 0.7706085547749967, 0.17226668782135565),
            (0.172266687821355, 0.05712475740364803, 0.7706085547749969),
            (0.17226668782135557, 0.7706085547749965, 0.05712475740364801),
            (0.05712475740364753, 0.1722666878213555, 0.7706085547749969),
            (0.7706085547749967, 0.057124757403647655, 0.17226668782135565),
            (0.879757171370171, 0.11897449769695695, 0.0012683309328721407),
            (0.0012683309328720416, 0.8797571713701711, 0.11897449769695691),
            (0.11897449769695623, 0.001268330932872208, 0.8797571713701716),
            (0.1189744976969569, 0.879757171370171, 0.0012683309328721407),
            (0.0012683309328715975, 0.11897449769695673, 0.8797571713701716),
            (0.8797571713701711, 0.0012683309328720346, 0.11897449769695691),
        ],
        [0.016394176772062685, 0.016394176772062685, 0.016394176772062685, 0.007218154056766914, 0.007218154056766914, 0.007218154056766914, 0.007218154056766914, 0.007218154056766914, 0.007218154056766914, 0.007216849834888331, 0.007216849834888331, 0.007216849834888331, 0.019285755393530366, 0.019285755393530366, 0.019285755393530366, 0.019285755393530366, 0.019285755393530366, 0.019285755393530366, 0.025887052253645813, 0.025887052253645813, 0.025887052253645813, 0.021081294368496543, 0.021081294368496543, 0.021081294368496543, 0.0024617018012000435, 0.0024617018012000435, 0.0024617018012000435, 0.010941790684714462, 0.010941790684714462, 0.010941790684714462, 0.012332876606281856, 0.012332876606281856, 0.012332876606281856, 0.012332876606281856, 0.012332876606281856, 0.012332876606281856, 0.0025051144192503373, 0.0025051144192503373, 0.0025051144192503373, 0.0025051144192503373, 0.0025051144192503373, 0.0025051144192503373],
    ),
    15: (
        [
            (0.7400435401338441, 0.12997822993307803, 0.1299782299330779),
            (0.12997822993307806, 0.7400435401338441, 0.1299782299330779),
            (0.12997822993307762, 0.12997822993307756, 0.7400435401338449),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.4600769492970598, 0.4600769492970598, 0.07984610140588048),
            (0.07984610140588055, 0.46007694929705967, 0.4600769492970598),
            (0.46007694929705956, 0.07984610140588061, 0.4600769492970598),
            (0.7330839951106171, 0.18232178340719113, 0.08459422148219178),
            (0.08459422148219176, 0.7330839951106168, 0.18232178340719138),
            (0.18232178340719118, 0.08459422148219198, 0.7330839951106168),
            (0.18232178340719107, 0.7330839951106172, 0.08459422148219178),
            (0.08459422148219131, 0.18232178340719113, 0.7330839951106175),
            (0.7330839951106167, 0.08459422148219183, 0.18232178340719138),
            (0.8337725261484157, 0.15020038406523875, 0.016027089786345542),
            (0.01602708978634526, 0.8337725261484162, 0.15020038406523845),
            (0.1502003840652385, 0.016027089786345483, 0.833772526148416),
            (0.1502003840652386, 0.8337725261484158, 0.016027089786345542),
            (0.01602708978634504, 0.150200384065239, 0.833772526148416),
            (0.8337725261484155, 0.016027089786345497, 0.15020038406523903),
            (0.5792382424060447, 0.3231113151637127, 0.09765044243024254),
            (0.09765044243024223, 0.579238242406045, 0.3231113151637128),
            (0.3231113151637124, 0.09765044243024235, 0.5792382424060453),
            (0.3231113151637127, 0.5792382424060447, 0.09765044243024254),
            (0.09765044243024246, 0.32311131516371233, 0.5792382424060453),
            (0.5792382424060449, 0.09765044243024207, 0.32311131516371294),
            (0.4916858166302973, 0.49168581663029726, 0.016628366739405466),
            (0.016628366739405154, 0.4916858166302972, 0.4916858166302976),
            (0.4916858166302972, 0.016628366739405237, 0.4916858166302976),
            (0.5569353184097159, 0.22153234079514195, 0.2215323407951422),
            (0.22153234079514195, 0.5569353184097159, 0.2215323407951422),
            (0.22153234079514195, 0.22153234079514184, 0.5569353184097162),
            (0.39693373740906046, 0.3969337374090604, 0.20613252518187916),
            (0.20613252518187875, 0.3969337374090608, 0.39693373740906046),
            (0.39693373740906046, 0.20613252518187847, 0.396933737409061),
            (0.6735980666116939, 0.3079476814836728, 0.018454251904633366),
            (0.018454251904633012, 0.6735980666116941, 0.3079476814836729),
            (0.30794768148367235, 0.01845425190463329, 0.6735980666116944),
            (0.3079476814836728, 0.6735980666116939, 0.018454251904633366),
            (0.01845425190463268, 0.30794768148367285, 0.6735980666116944),
            (0.673598066611694, 0.018454251904632984, 0.3079476814836731),
            (0.8873161646077996, 0.05634191769610066, 0.05634191769609971),
            (0.056341917696099864, 0.8873161646077998, 0.05634191769610029),
            (0.056341917696099975, 0.056341917696099975, 0.8873161646078),
            (0.9608512354248772, 0.03803522930110918, 0.001113535274013614),
            (0.0011135352740138105, 0.9608512354248769, 0.038035229301109294),
            (0.03803522930110781, 0.0011135352740127002, 0.9608512354248795),
            (0.03803522930110925, 0.9608512354248772, 0.001113535274013614),
            (0.0011135352740123672, 0.03803522930110814, 0.9608512354248795),
            (0.9608512354248768, 0.0011135352740138452, 0.038035229301109294),
        ],
        [0.0036987520335230646, 0.0036987520335230646, 0.0036987520335230646, 0.014865209874035654, 0.010797043968219237, 0.010797043968219237, 0.010797043968219237, 0.012115004391562805, 0.012115004391562805, 0.012115004391562805, 0.012115004391562805, 0.012115004391562805, 0.012115004391562805, 0.005614252149439045, 0.005614252149439045, 0.005614252149439045, 0.005614252149439045, 0.005614252149439045, 0.005614252149439045, 0.015537610235255479, 0.015537610235255479, 0.015537610235255479, 0.015537610235255479, 0.015537610235255479, 0.015537610235255479, 0.007916138175010903, 0.007916138175010903, 0.007916138175010903, 0.02314364305259904, 0.02314364305259904, 0.02314364305259904, 0.023168020695603617, 0.023168020695603617, 0.023168020695603617, 0.008218381046413958, 0.008218381046413958, 0.008218381046413958, 0.008218381046413958, 0.008218381046413958, 0.008218381046413958, 0.0075422371237985255, 0.0075422371237985255, 0.0075422371237985255, 0.00123763300727896, 0.00123763300727896, 0.00123763300727896, 0.00123763300727896, 0.00123763300727896, 0.00123763300727896],
    ),
    16: (
        [
            (0.5765655597692545, 0.4137694858270855, 0.009664954403660001),
            (0.009664954403659998, 0.5765655597692549, 0.41376948582708506),
            (0.41376948582708506, 0.009664954403659942, 0.576565559769255),
            (0.4137694858270855, 0.5765655597692545, 0.009664954403660001),
            (0.009664954403659998, 0.413769485827085, 0.576565559769255),
            (0.5765655597692542, 0.00966495440366022, 0.4137694858270856),
            (0.6655146084153339, 0.30417944822947995, 0.030305943355186122),
            (0.030305943355186216, 0.665514608415334, 0.3041794482294798),
            (0.3041794482294794, 0.030305943355186327, 0.6655146084153343),
            (0.30417944822948007, 0.6655146084153338, 0.030305943355186122),
            (0.030305943355185883, 0.30417944822947984, 0.6655146084153343),
            (0.665514608415334, 0.03030594335518605, 0.30417944822947995),
            (0.8666510555195235, 0.06667447224023854, 0.06667447224023791),
            (0.06667447224023837, 0.8666510555195232, 0.0666744722402385),
            (0.06667447224023815, 0.06667447224023815, 0.8666510555195237),
            (0.8995779382011906, 0.08960908902270566, 0.010812972776103692),
            (0.010812972776103602, 0.8995779382011907, 0.08960908902270567),
            (0.08960908902270548, 0.010812972776103769, 0.8995779382011907),
            (0.08960908902270615, 0.8995779382011901, 0.010812972776103692),
            (0.010812972776103491, 0.08960908902270587, 0.8995779382011907),
            (0.8995779382011904, 0.010812972776103387, 0.08960908902270624),
            (0.5967314670634688, 0.2966153724003829, 0.1066531605361483),
            (0.10665316053614848, 0.5967314670634685, 0.296615372400383),
            (0.2966153724003826, 0.10665316053614865, 0.5967314670634687),
            (0.29661537240038294, 0.5967314670634688, 0.1066531605361483),
            (0.10665316053614815, 0.29661537240038316, 0.5967314670634687),
            (0.5967314670634684, 0.10665316053614837, 0.29661537240038327),
            (0.5173566385972435, 0.24132168070137844, 0.24132168070137816),
            (0.24132168070137838, 0.5173566385972435, 0.24132168070137816),
            (0.24132168070137805, 0.2413216807013781, 0.5173566385972438),
            (0.41279809595522376, 0.41279809595522376, 0.17440380808955244),
            (0.17440380808955247, 0.4127980959552235, 0.4127980959552241),
            (0.41279809595522343, 0.17440380808955247, 0.4127980959552241),
            (0.7788823295056969, 0.16976335515028995, 0.05135431534401313),
            (0.051354315344013024, 0.778882329505697, 0.16976335515028992),
            (0.16976335515028917, 0.051354315344013135, 0.7788823295056977),
            (0.1697633551502894, 0.7788823295056975, 0.05135431534401313),
            (0.05135431534401269, 0.16976335515028962, 0.7788823295056977),
            (0.778882329505697, 0.05135431534401304, 0.16976335515028992),
            (0.6998725268259298, 0.15006373658703487, 0.1500637365870353),
            (0.15006373658703487, 0.6998725268259298, 0.1500637365870353),
            (0.15006373658703498, 0.15006373658703503, 0.6998725268259299),
            (0.7822542773667973, 0.21404877992584734, 0.0036969427073553574),
            (0.003696942707355211, 0.7822542773667974, 0.21404877992584734),
            (0.2140487799258468, 0.0036969427073558214, 0.7822542773667974),
            (0.21404877992584737, 0.7822542773667973, 0.0036969427073553574),
            (0.003696942707355211, 0.2140487799258473, 0.7822542773667974),
            (0.7822542773667973, 0.0036969427073553357, 0.21404877992584734),
            (0.46954803099668485, 0.4695480309966849, 0.06090393800663022),
            (0.060903938006629854, 0.4695480309966849, 0.4695480309966852),
            (0.46954803099668485, 0.06090393800662991, 0.4695480309966852),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.965916741188563, 0.017041629405718912, 0.01704162940571817),
            (0.017041629405718184, 0.9659167411885631, 0.01704162940571875),
            (0.017041629405719294, 0.017041629405719294, 0.9659167411885614),
        ],
        [0.004091105276611071, 0.004091105276611071, 0.004091105276611071, 0.004091105276611071, 0.004091105276611071, 0.004091105276611071, 0.006991803562326779, 0.006991803562326779, 0.006991803562326779, 0.006991803562326779, 0.006991803562326779, 0.006991803562326779, 0.006212712797780522, 0.006212712797780522, 0.006212712797780522, 0.0028759349852485803, 0.0028759349852485803, 0.0028759349852485803, 0.0028759349852485803, 0.0028759349852485803, 0.0028759349852485803, 0.01582303084099163, 0.01582303084099163, 0.01582303084099163, 0.01582303084099163, 0.01582303084099163, 0.01582303084099163, 0.02059202053489628, 0.02059202053489628, 0.02059202053489628, 0.020492609893407693, 0.020492609893407693, 0.020492609893407693, 0.008826540523551647, 0.008826540523551647, 0.008826540523551647, 0.008826540523551647, 0.008826540523551647, 0.008826540523551647, 0.014391748351374467, 0.014391748351374467, 0.014391748351374467, 0.002307345319864569, 0.002307345319864569, 0.002307345319864569, 0.002307345319864569, 0.002307345319864569, 0.002307345319864569, 0.013546834733855222, 0.013546834733855222, 0.013546834733855222, 0.023113955157095693, 0.0018945676191321123, 0.0018945676191321123, 0.0018945676191321123],
    ),
    17: (
        [
            (0.4171034443615993, 0.41710344436159924, 0.1657931112768015),
            (0.16579311127680119, 0.4171034443615993, 0.4171034443615996),
            (0.41710344436159874, 0.1657931112768017, 0.4171034443615996),
            (0.9159193532978172, 0.07250547079900223, 0.01157517590318056),
            (0.011575175903180912, 0.9159193532978167, 0.0725054707990024),
            (0.07250547079900271, 0.011575175903181412, 0.9159193532978159),
            (0.07250547079900227, 0.9159193532978172, 0.01157517590318056),
            (0.011575175903181023, 0.07250547079900299, 0.9159193532978159),
            (0.9159193532978168, 0.011575175903180794, 0.0725054707990024),
            (0.6392837674672587, 0.18035811626637066, 0.18035811626637066),
            (0.18035811626637066, 0.6392837674672587, 0.18035811626637066),
            (0.18035811626637033, 0.18035811626637038, 0.6392837674672592),
            (0.571294867944684, 0.415475459295229, 0.01322967276008702),
            (0.013229672760086908, 0.5712948679446839, 0.41547545929522917),
            (0.4154754592952288, 0.013229672760086741, 0.5712948679446845),
            (0.415475459295229, 0.571294867944684, 0.01322967276008702),
            (0.013229672760086686, 0.4154754592952288, 0.5712948679446845),
            (0.5712948679446839, 0.013229672760086936, 0.41547545929522917),
            (0.7150722591106426, 0.2717918700553547, 0.01313587083400263),
            (0.013135870834002472, 0.7150722591106426, 0.2717918700553549),
            (0.27179187005535443, 0.013135870834002472, 0.7150722591106431),
            (0.27179187005535466, 0.7150722591106428, 0.01313587083400263),
            (0.013135870834002805, 0.27179187005535477, 0.7150722591106424),
            (0.7150722591106425, 0.013135870834002583, 0.2717918700553549),
            (0.5432755795961596, 0.2992189424769706, 0.15750547792686978),
            (0.15750547792686975, 0.5432755795961599, 0.29921894247697034),
            (0.29921894247697, 0.15750547792686997, 0.54327557959616),
            (0.2992189424769707, 0.5432755795961596, 0.15750547792686978),
            (0.15750547792687009, 0.29921894247696995, 0.54327557959616),
            (0.5432755795961597, 0.1575054779268697, 0.29921894247697056),
            (0.42858699512682663, 0.28570650243658663, 0.2857065024365867),
            (0.2857065024365866, 0.42858699512682663, 0.28570650243658674),
            (0.2857065024365866, 0.2857065024365866, 0.4285869951268268),
            (0.6263690303864523, 0.3062815917461863, 0.06734937786736138),
            (0.06734937786736117, 0.6263690303864522, 0.30628159174618663),
            (0.3062815917461862, 0.06734937786736117, 0.6263690303864526),
            (0.3062815917461863, 0.6263690303864523, 0.06734937786736138),
            (0.06734937786736117, 0.3062815917461862, 0.6263690303864526),
            (0.6263690303864522, 0.06734937786736112, 0.30628159174618674),
            (0.7532351459364584, 0.16872251349525935, 0.07804234056828233),
            (0.0780423405682823, 0.7532351459364584, 0.16872251349525935),
            (0.16872251349525924, 0.07804234056828241, 0.7532351459364584),
            (0.16872251349525935, 0.7532351459364584, 0.07804234056828233),
            (0.07804234056828219, 0.16872251349525946, 0.7532351459364584),
            (0.7532351459364581, 0.078042340568282, 0.16872251349525993),
            (0.8666918730408061, 0.06665406347959715, 0.06665406347959675),
            (0.0666540634795969, 0.8666918730408057, 0.06665406347959732),
            (0.06665406347959668, 0.06665406347959668, 0.8666918730408066),
            (0.824790070165088, 0.15919228747279301, 0.01601764236211902),
            (0.016017642362119222, 0.824790070165088, 0.15919228747279285),
            (0.15919228747279246, 0.01601764236211939, 0.8247900701650882),
            (0.15919228747279301, 0.824790070165088, 0.01601764236211902),
            (0.016017642362119444, 0.1591922874727924, 0.8247900701650882),
            (0.8247900701650881, 0.016017642362119083, 0.15919228747279285),
            (0.9704890166784921, 0.01475549166075403, 0.014755491660753935),
            (0.014755491660753961, 0.9704890166784921, 0.014755491660753935),
            (0.014755491660754405, 0.01475549166075446, 0.9704890166784911),
            (0.4655978716188902, 0.4655978716188902, 0.06880425676221955),
            (0.06880425676221913, 0.46559787161889027, 0.46559787161889055),
            (0.4655978716188902, 0.06880425676221924, 0.46559787161889055),
        ],
        [0.013655463264051078, 0.013655463264051078, 0.013655463264051078, 0.002292174200867937, 0.002292174200867937, 0.002292174200867937, 0.002292174200867937, 0.002292174200867937, 0.002292174200867937, 0.013156315294008996, 0.013156315294008996, 0.013156315294008996, 0.005199219977919784, 0.005199219977919784, 0.005199219977919784, 0.005199219977919784, 0.005199219977919784, 0.005199219977919784, 0.004346107250500591, 0.004346107250500591, 0.004346107250500591, 0.004346107250500591, 0.004346107250500591, 0.004346107250500591, 0.013085812967668496, 0.013085812967668496, 0.013085812967668496, 0.013085812967668496, 0.013085812967668496, 0.013085812967668496, 0.018858118576397655, 0.018858118576397655, 0.018858118576397655, 0.011243886273345537, 0.011243886273345537, 0.011243886273345537, 0.011243886273345537, 0.011243886273345537, 0.011243886273345537, 0.010278949160227256, 0.010278949160227256, 0.010278949160227256, 0.010278949160227256, 0.010278949160227256, 0.010278949160227256, 0.006229500401152713, 0.006229500401152713, 0.006229500401152713, 0.0039891501029648, 0.0039891501029648, 0.0039891501029648, 0.0039891501029648, 0.0039891501029648, 0.0039891501029648, 0.0013869437888188228, 0.0013869437888188228, 0.0013869437888188228, 0.012509725475248692, 0.012509725475248692, 0.012509725475248692],
    ),
    18: (
        [
            (0.5245289252324958, 0.3850440344131638, 0.0904270403543404),
            (0.09042704035434057, 0.5245289252324956, 0.38504403441316376),
            (0.3850440344131636, 0.09042704035434052, 0.524528925232496),
            (0.3850440344131638, 0.5245289252324958, 0.0904270403543404),
            (0.09042704035434057, 0.38504403441316354, 0.524528925232496),
            (0.5245289252324955, 0.09042704035434049, 0.385044034413164),
            (0.47491821132404577, 0.4749182113240458, 0.05016357735190839),
            (0.05016357735190846, 0.4749182113240455, 0.4749182113240461),
            (0.47491821132404544, 0.05016357735190846, 0.4749182113240461),
            (0.6967229860547902, 0.15163850697260514, 0.15163850697260467),
            (0.15163850697260428, 0.6967229860547904, 0.15163850697260525),
            (0.15163850697260473, 0.15163850697260467, 0.6967229860547907),
            (0.9402249256838529, 0.04727614183265188, 0.012498932483495226),
            (0.012498932483495762, 0.9402249256838527, 0.04727614183265147),
            (0.047276141832651275, 0.012498932483495373, 0.9402249256838534),
            (0.04727614183265194, 0.9402249256838529, 0.012498932483495226),
            (0.012498932483494984, 0.04727614183265155, 0.9402249256838534),
            (0.940224925683853, 0.012498932483494988, 0.047276141832652045),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.6439263069481048, 0.30206195771287075, 0.05401173533902443),
            (0.054011735339024036, 0.6439263069481052, 0.3020619577128708),
            (0.30206195771287025, 0.05401173533902426, 0.6439263069481055),
            (0.3020619577128707, 0.6439263069481048, 0.05401173533902443),
            (0.054011735339024036, 0.30206195771287103, 0.6439263069481049),
            (0.6439263069481049, 0.05401173533902395, 0.3020619577128711),
            (0.7329888214065167, 0.2565061597742417, 0.010505018819241645),
            (0.010505018819241707, 0.7329888214065166, 0.2565061597742417),
            (0.25650615977424107, 0.010505018819242096, 0.7329888214065168),
            (0.25650615977424174, 0.7329888214065167, 0.010505018819241645),
            (0.010505018819241596, 0.2565061597742416, 0.7329888214065168),
            (0.7329888214065167, 0.01050501881924168, 0.2565061597742417),
            (0.41106710187591955, 0.41106710187591944, 0.17786579624816107),
            (0.17786579624816112, 0.4110671018759191, 0.41106710187591977),
            (0.4110671018759191, 0.17786579624816112, 0.41106710187591977),
            (0.7553984164057086, 0.1784791255658877, 0.06612245802840368),
            (0.06612245802840377, 0.7553984164057086, 0.17847912556588763),
            (0.1784791255658873, 0.06612245802840339, 0.7553984164057093),
            (0.17847912556588774, 0.7553984164057086, 0.06612245802840368),
            (0.06612245802840289, 0.17847912556588785, 0.7553984164057093),
            (0.7553984164057093, 0.06612245802840316, 0.17847912556588763),
            (0.46877078018925133, 0.26561460990537433, 0.2656146099053743),
            (0.2656146099053742, 0.46877078018925145, 0.2656146099053743),
            (0.2656146099053742, 0.2656146099053742, 0.46877078018925156),
            (0.9924821113178633, 0.0037589443410683877, 0.0037589443410682597),
            (0.003758944341068382, 0.9924821113178633, 0.0037589443410682597),
            (0.0037589443410692702, 0.0037589443410694923, 0.9924821113178612),
            (0.5823597834782126, 0.2685733063960136, 0.14906691012577378),
            (0.14906691012577333, 0.5823597834782125, 0.2685733063960141),
            (0.2685733063960136, 0.14906691012577367, 0.5823597834782127),
            (0.26857330639601407, 0.5823597834782122, 0.14906691012577378),
            (0.14906691012577356, 0.2685733063960137, 0.5823597834782127),
            (0.5823597834782125, 0.14906691012577342, 0.2685733063960141),
            (0.5772425066507145, 0.4110656686746185, 0.011691824674667032),
            (0.011691824674667117, 0.5772425066507142, 0.41106566867461863),
            (0.411065668674618, 0.011691824674667006, 0.577242506650715),
            (0.4110656686746186, 0.5772425066507144, 0.011691824674667032),
            (0.01169182467466734, 0.4110656686746183, 0.5772425066507144),
            (0.5772425066507142, 0.0116918246746672, 0.41106566867461863),
            (0.852889644949669, 0.13277883027138904, 0.014331524778941928),
            (0.014331524778941729, 0.8528896449496689, 0.13277883027138931),
            (0.13277883027138881, 0.014331524778941784, 0.8528896449496695),
            (0.13277883027138904, 0.852889644949669, 0.014331524778941928),
            (0.014331524778941285, 0.13277883027138926, 0.8528896449496695),
            (0.8528896449496688, 0.014331524778941868, 0.13277883027138931),
            (0.8551225888653342, 0.07243870556733316, 0.0724387055673327),
            (0.07243870556733323, 0.8551225888653341, 0.0724387055673327),
            (0.07243870556733267, 0.07243870556733267, 0.8551225888653347),
        ],
        [0.007664129097276563, 0.007664129097276563, 0.007664129097276563, 0.007664129097276563, 0.007664129097276563, 0.007664129097276563, 0.006553513745869383, 0.006553513745869383, 0.006553513745869383, 0.010159169422729198, 0.010159169422729198, 0.010159169422729198, 0.0021087583873722194, 0.0021087583873722194, 0.0021087583873722194, 0.0021087583873722194, 0.0021087583873722194, 0.0021087583873722194, 0.015374260619557904, 0.00818295420699328, 0.00818295420699328, 0.00818295420699328, 0.00818295420699328, 0.00818295420699328, 0.00818295420699328, 0.003864917640003119, 0.003864917640003119, 0.003864917640003119, 0.003864917640003119, 0.003864917640003119, 0.003864917640003119, 0.016735997029923948, 0.016735997029923948, 0.016735997029923948, 0.00845582695874003, 0.00845582695874003, 0.00845582695874003, 0.00845582695874003, 0.00845582695874003, 0.00845582695874003, 0.015558198301003042, 0.015558198301003042, 0.015558198301003042, 0.00026600280847389, 0.00026600280847389, 0.00026600280847389, 0.01379644324428973, 0.01379644324428973, 0.01379644324428973, 0.01379644324428973, 0.01379644324428973, 0.01379644324428973, 0.004793062237180747, 0.004793062237180747, 0.004793062237180747, 0.004793062237180747, 0.004793062237180747, 0.004793062237180747, 0.003820852486359804, 0.003820852486359804, 0.003820852486359804, 0.003820852486359804, 0.003820852486359804, 0.003820852486359804, 0.006895143302383457, 0.006895143302383457, 0.006895143302383457],
    ),
    19: (
        [
            (0.8525725750765227, 0.1424222825711268, 0.005005142352350435),
            (0.005005142352350722, 0.8525725750765226, 0.14242228257112668),
            (0.14242228257112655, 0.005005142352350445, 0.8525725750765231),
            (0.14242228257112688, 0.8525725750765227, 0.005005142352350435),
            (0.005005142352350056, 0.14242228257112693, 0.8525725750765231),
            (0.852572575076523, 0.005005142352349876, 0.14242228257112724),
            (0.8949474402917927, 0.05252627985410377, 0.05252627985410346),
            (0.0525262798541033, 0.8949474402917933, 0.05252627985410346),
            (0.05252627985410352, 0.052526279854103464, 0.8949474402917931),
            (0.9301390385986206, 0.060083899962702574, 0.009777061438676857),
            (0.00977706143867707, 0.9301390385986209, 0.060083899962702046),
            (0.06008389996270336, 0.009777061438678347, 0.9301390385986182),
            (0.06008389996270258, 0.9301390385986206, 0.009777061438676857),
            (0.00977706143867807, 0.060083899962703746, 0.9301390385986182),
            (0.9301390385986207, 0.0097770614386767, 0.06008389996270266),
            (0.8301568806048567, 0.13070066996053473, 0.03914244943460861),
            (0.03914244943460876, 0.8301568806048569, 0.1307006699605343),
            (0.13070066996053398, 0.03914244943460876, 0.8301568806048573),
            (0.13070066996053464, 0.8301568806048567, 0.03914244943460861),
            (0.03914244943460843, 0.13070066996053437, 0.8301568806048573),
            (0.8301568806048565, 0.03914244943460858, 0.1307006699605349),
            (0.559368807008034, 0.3113183832239869, 0.12931280976797907),
            (0.129312809767979, 0.559368807008034, 0.31131838322398697),
            (0.31131838322398675, 0.1293128097679787, 0.5593688070080346),
            (0.31131838322398686, 0.559368807008034, 0.12931280976797907),
            (0.12931280976797876, 0.3113183832239867, 0.5593688070080346),
            (0.559368807008034, 0.12931280976797893, 0.3113183832239871),
            (0.7771038885660027, 0.11144805571699869, 0.11144805571699865),
            (0.11144805571699856, 0.7771038885660028, 0.11144805571699865),
            (0.11144805571699856, 0.11144805571699862, 0.7771038885660028),
            (0.9767219453441549, 0.011639027327922932, 0.011639027327922111),
            (0.011639027327922657, 0.9767219453441547, 0.011639027327922687),
            (0.011639027327923213, 0.011639027327923213, 0.9767219453441536),
            (0.4896757336937503, 0.2551621331531252, 0.2551621331531246),
            (0.2551621331531244, 0.4896757336937505, 0.25516213315312514),
            (0.25516213315312486, 0.2551621331531248, 0.4896757336937504),
            (0.7040048688065316, 0.22143394188911358, 0.07456118930435485),
            (0.07456118930435518, 0.7040048688065313, 0.22143394188911344),
            (0.22143394188911314, 0.07456118930435512, 0.7040048688065318),
            (0.2214339418891137, 0.7040048688065315, 0.07456118930435485),
            (0.07456118930435518, 0.22143394188911308, 0.7040048688065318),
            (0.7040048688065312, 0.0745611893043553, 0.22143394188911344),
            (0.40396971796638614, 0.40396971796638614, 0.19206056406722768),
            (0.19206056406722793, 0.4039697179663859, 0.4039697179663862),
            (0.4039697179663859, 0.1920605640672279, 0.4039697179663862),
            (0.60508575853531, 0.35402592699971186, 0.040888314464978204),
            (0.04088831446497798, 0.6050857585353101, 0.3540259269997119),
            (0.3540259269997119, 0.040888314464977815, 0.6050857585353103),
            (0.3540259269997118, 0.60508575853531, 0.040888314464978204),
            (0.04088831446497787, 0.35402592699971186, 0.6050857585353103),
            (0.6050857585353099, 0.0408883144649779, 0.3540259269997122),
            (0.6436579878407453, 0.17817100607962735, 0.17817100607962727),
            (0.178171006079627, 0.6436579878407451, 0.17817100607962785),
            (0.17817100607962733, 0.17817100607962721, 0.6436579878407455),
            (0.4591943889568275, 0.4591943889568275, 0.08161122208634496),
            (0.08161122208634453, 0.45919438895682757, 0.45919438895682785),
            (0.4591943889568275, 0.08161122208634458, 0.45919438895682785),
            (0.33333333333333326, 0.33333333333333326, 0.3333333333333335),
            (0.4925124498658743, 0.4925124498658743, 0.014975100268251407),
            (0.01497510026825144, 0.4925124498658743, 0.49251244986587434),
            (0.49251244986587384, 0.0149751002682518, 0.49251244986587434),
            (0.743182257085669, 0.24189410400689285, 0.014923638907438232),
            (0.014923638907438641, 0.7431822570856685, 0.24189410400689285),
            (0.24189410400689226, 0.014923638907438308, 0.7431822570856694),
            (0.24189410400689293, 0.7431822570856689, 0.014923638907438232),
            (0.01492363890743853, 0.24189410400689249, 0.743182257085669),
            (0.7431822570856691, 0.014923638907438072, 0.24189410400689285),
            (0.6333104818121877, 0.3646204143387098, 0.002069103849102453),
            (0.002069103849102527, 0.6333104818121874, 0.3646204143387101),
            (0.3646204143387095, 0.0020691038491025826, 0.6333104818121879),
            (0.36462041433870984, 0.6333104818121877, 0.002069103849102453),
            (0.002069103849102083, 0.3646204143387101, 0.6333104818121879),
            (0.6333104818121873, 0.002069103849102333, 0.36462041433871034),
        ],
        [0.0014628462439400345, 0.0014628462439400345, 0.0014628462439400345, 0.0014628462439400345, 0.0014628462439400345, 0.0014628462439400345, 0.00355469681139747, 0.00355469681139747, 0.00355469681139747, 0.0016636944202969518, 0.0016636944202969518, 0.0016636944202969518, 0.0016636944202969518, 0.0016636944202969518, 0.0016636944202969518, 0.004847759540812113, 0.004847759540812113, 0.004847759540812113, 0.004847759540812113, 0.004847759540812113, 0.004847759540812113, 0.013173132353722668, 0.013173132353722668, 0.013173132353722668, 0.013173132353722668, 0.013173132353722668, 0.013173132353722668, 0.007617478258502403, 0.007617478258502403, 0.007617478258502403, 0.0008825962091542712, 0.0008825962091542712, 0.0008825962091542712, 0.015876427293764983, 0.015876427293764983, 0.015876427293764983, 0.009054037295215247, 0.009054037295215247, 0.009054037295215247, 0.009054037295215247, 0.009054037295215247, 0.009054037295215247, 0.015768679322619814, 0.015768679322619814, 0.015768679322619814, 0.008051104730469728, 0.008051104730469728, 0.008051104730469728, 0.008051104730469728, 0.008051104730469728, 0.008051104730469728, 0.012325990526792428, 0.012325990526792428, 0.012325990526792428, 0.011491785488561617, 0.011491785488561617, 0.011491785488561617, 0.017234580425452638, 0.005160941091209433, 0.005160941091209433, 0.005160941091209433, 0.004227962419546743, 0.004227962419546743, 0.004227962419546743, 0.004227962419546743, 0.004227962419546743, 0.004227962419546743, 0.0016410687574198676, 0.0016410687574198676, 0.0016410687574198676, 0.0016410687574198676, 0.0016410687574198676, 0.0016410687574198676],
    ),
}

TETRAHEDRON = {
    1: (
        [
            (0.25, 0.25, 0.25, 0.25),
        ],
        [0.16666666666666666],
    ),
    2: (
        [
            (0.4477325521013725, 0.18002969351036546, 0.3653145188146346, 0.0069232355736274),
            (0.004839936345871765, 0.1559331204991858, 0.45746158708559564, 0.38176535606934675),
            (0.3528463487085869, 0.21607642918484793, 0.0003755150287293079, 0.4307017070778359),
            (0.014827610062423613, 0.8215725409676197, 0.12366680032845828, 0.03993304864149835),
        ],
        [0.05008682322282938, 0.04646292944776128, 0.05318232258357911, 0.016934591412496786],
    ),
    3: (
        [
            (0.35862072046688376, 0.19011700243928376, 0.43985894764927524, 0.011403329444557273),
            (0.13084716895209636, 0.15868516322744056, 0.12480486216524718, 0.5856628056552159),
            (0.362126829945534, 0.010905212211189064, 0.3454441557197307, 0.28152380212354616),
            (0.14037280579421108, 0.571226052149115, 0.1414827519695042, 0.14691839008716973),
            (0.6384932999617271, 0.17081692516498903, 0.03787163178235677, 0.15281814309092712),
            (0.012718366313681173, 0.16200149169852424, 0.6414297914956967, 0.18385035049209789),
        ],
        [0.022094671190740812, 0.0374025278195929, 0.021344402118457777, 0.042000663468250474, 0.023437401610067174, 0.020387000459557512],
    ),
    4: (
        [
            (0.1118007673973831, 0.09720464458758321, 0.10660417256199371, 0.6843904154530399),
            (0.32329398483747884, 0.029569495206479918, 0.3292329597426468, 0.3179035602133944),
            (0.10962240533194156, 0.43271023904776845, 0.10384411641099286, 0.35382323920929715),
            (0.3284732067220386, 0.24027666492807273, 0.30444840243449695, 0.12680172591539174),
            (0.0023910074574391427, 0.1294113737889102, 0.5380072039161858, 0.3301904148374648),
            (0.562972760143046, 0.12154199133392798, 0.008991260093335734, 0.3064939884296903),
            (0.056824017127933724, 0.4507658760912767, 0.4329534904813557, 0.059456616299433905),
            (0.4796110110256553, 0.4192663138795132, 0.05334123953574524, 0.047781435559086365),
            (0.15636389323939515, 0.0672232948933833, 0.7412288820936229, 0.03518392977359862),
            (0.09798720364927926, 0.752508507009655, 0.08140491840285936, 0.0680993709382064),
            (0.7712547326953763, 0.0404905067275903, 0.17469405869723081, 0.013560701879802578),
        ],
        [0.017744672359248353, 0.018372372071416232, 0.025829352669374417, 0.03223513534160567, 0.012693785874259731, 0.013237780011337552, 0.011578327656272565, 0.009988864191093249, 0.009232299811929398, 0.009212228192656144, 0.006541848487473331],
    ),
    5: (
        [
            (0.09273525031089103, 0.09273525031089125, 0.09273525031089125, 0.7217942490673265),
            (0.045503704125649413, 0.4544962958743503, 0.045503704125649524, 0.45449629587435075),
            (0.04550370412564986, 0.04550370412564975, 0.45449629587435036, 0.4544962958743501),
            (0.4544962958743506, 0.04550370412564961, 0.04550370412564975, 0.4544962958743501),
            (0.31088591926330067, 0.31088591926330056, 0.3108859192633006, 0.06734224221009823),
            (0.31088591926330034, 0.06734224221009832, 0.3108859192633008, 0.31088591926330056),
            (0.31088591926330056, 0.31088591926330045, 0.0673422422100984, 0.3108859192633006),
            (0.06734224221009777, 0.3108859192633009, 0.3108859192633008, 0.31088591926330056),
            (0.09273525031089125, 0.7217942490673263, 0.0927352503108914, 0.09273525031089118),
            (0.7217942490673261, 0.09273525031089119, 0.0927352503108914, 0.09273525031089118),
            (0.09273525031089147, 0.09273525031089136, 0.721794249067326, 0.09273525031089118),
            (0.045503704125649524, 0.4544962958743506, 0.45449629587435053, 0.045503704125649254),
            (0.45449629587435025, 0.4544962958743502, 0.04550370412564962, 0.045503704125649864),
            (0.4544962958743506, 0.04550370412564961, 0.45449629587435053, 0.045503704125649254),
        ],
        [0.012248840519393667, 0.007091003462846907, 0.007091003462846907, 0.007091003462846925, 0.018781320953002598, 0.018781320953002598, 0.018781320953002598, 0.018781320953002598, 0.012248840519393648, 0.012248840519393667, 0.012248840519393648, 0.007091003462846907, 0.007091003462846907, 0.007091003462846907],
    ),
    6: (
        [
            (0.03391614239336138, 0.038836084344884454, 0.02431897424814287, 0.9029287990136113),
            (0.030618856327857658, 0.06476943693005299, 0.26784419818357563, 0.6367675085585137),
            (0.5208949933088284, 0.06477516044710538, 0.02346779557305412, 0.39086205067101215),
            (0.06345374635312884, 0.27790366933007776, 0.06373289529499769, 0.5949096890217958),
            (0.22016796841427466, 0.06609866241468065, 0.08367881406005505, 0.6300545551109896),
            (0.01866711825473022, 0.32511965857702535, 0.32937971854919856, 0.32683350461904576),
            (0.33225310994407886, 0.31919428034893105, 0.3041692653497818, 0.044383344357208344),
            (0.31303572433284077, 0.32838817123122155, 0.03828867073824534, 0.3202874336976923),
            (0.21187747126825984, 0.05509902249072579, 0.3519391973347044, 0.38108430890631),
            (0.5220116576881623, 0.12464996363748623, 0.15210381130993061, 0.20123456736442094),
            (0.05616003854336016, 0.06592492316000975, 0.6243213635534298, 0.25359367474320027),
            (0.5301633223028145, 0.007354523838069477, 0.2112976585815864, 0.2511844952775296),
            (0.06089514992623579, 0.6174557201472688, 0.06319998094256979, 0.25844914898392557),
            (0.19518923315575354, 0.27942005294598815, 0.2558207842649863, 0.269569929633272),
            (0.07030848571044024, 0.2877250948264642, 0.577345781389727, 0.06462063807336858),
            (0.2735014073532307, 0.5947173018757956, 0.06517799276337038, 0.06660329800760326),
            (0.3261544076362779, 0.06678959978173782, 0.530063275481017, 0.07699271710096733),
            (0.06289472498862414, 0.6265402017088824, 0.24844954011889486, 0.06211553318359863),
            (0.701105547482842, 0.06001058302026907, 0.21304118323618582, 0.02584268626070308),
            (0.6102014095280659, 0.275786300469851, 0.05399614083591453, 0.06001614916616852),
            (0.07027109003412302, 0.05132520616520292, 0.8411389516623184, 0.037264752138355575),
            (0.8620416406867529, 0.04057605106681796, 0.008781957777518825, 0.08860035046891027),
            (0.044028453770615816, 0.903770001332182, 0.022865823814023238, 0.029335721083178907),
        ],
        [0.0011826324752765886, 0.0052515683137843985, 0.004038547812907386, 0.008148345983740358, 0.008838887318028232, 0.007206549449245559, 0.011189302702092833, 0.00997022461023819, 0.010435745880218552, 0.01072233699551458, 0.007265066343438193, 0.0037609445463571444, 0.0077688556877634485, 0.01876656741567795, 0.008989168438051996, 0.008294771681919045, 0.01051106031425341, 0.007858005078710201, 0.004250720711173733, 0.006619016274847041, 0.0026542465308339617, 0.00173722262061599, 0.0012068794819778284],
    ),
    7: (
        [
            (0.3274602848448772, 0.01920799348858522, 0.001996825818300043, 0.6513348958482376),
            (0.0004499853130808251, 0.32345684178959777, 0.060922184585450664, 0.6151709883118708),
            (0.06068399158005067, 0.062474022523150236, 0.06396943032579899, 0.8128725555710001),
            (0.18901894075832726, 0.014033084473305313, 0.2307849002376703, 0.5661630745306971),
            (0.027286230467786554, 0.06244441271290896, 0.32394807098918244, 0.586321285830122),
            (0.3764000494270888, 0.26150876917658283, 0.35011530450717093, 0.011975876889157504),
            (0.1523963260402147, 0.2604205879982617, 0.022532983493832287, 0.5646501024676913),
            (0.1586716871753484, 0.25828054736744366, 0.5003786698498158, 0.08266909560739216),
            (0.14191543727761347, 0.39717440299491735, 0.28986128190869076, 0.17104887781877848),
            (0.24855873222840552, 0.5504559416248596, 0.1572418559860032, 0.043743470160731754),
            (0.0622131202483589, 0.025833167731730222, 0.6315484739180048, 0.280405238101906),
            (0.3054372740505884, 0.10746243078315337, 0.11125113342694286, 0.4758491617393154),
            (0.08157576977067604, 0.2521305306293951, 0.2175544442163534, 0.4487392553835754),
            (0.06355212009603861, 0.6018235776318117, 0.04463026790663656, 0.2899940343655131),
            (0.6157912949870018, 0.03316569983103577, 0.07624147028396887, 0.2748015348979936),
            (0.17628425116957247, 0.10989597632702111, 0.4372480897645488, 0.27657168273885757),
            (0.2708715509466034, 0.41035809599493944, 0.0740087021391156, 0.24476165091934157),
            (0.42898304417109623, 0.17643822301494816, 0.21881262254750455, 0.1757661102664511),
            (0.5355285199885617, 0.19911057205288374, 0.0016135326199898247, 0.2637473753385648),
            (0.019893896904518815, 0.528711306413653, 0.23439649733596235, 0.21699829934586576),
            (0.403697328617046, 0.003929651487088043, 0.3505284068372831, 0.24184461305858287),
            (0.0001122816303799068, 0.22347020253014283, 0.5508889781422129, 0.22552853769726433),
            (0.5865542176163222, 0.2977852343835242, 0.068011104899261, 0.04764944310089256),
            (0.05076435592486095, 0.293770036523707, 0.6279832293585977, 0.02748237819283438),
            (0.2931235478457339, 0.05287762937885482, 0.5990192398798976, 0.054979582895513766),
            (0.6267123878514409, 0.05300013833454684, 0.2753098106871324, 0.0449776631268799),
            (0.04602688498550778, 0.5991009436200259, 0.31965837609701186, 0.03521379529745454),
            (0.05752921358755925, 0.820745300741595, 0.06281507284523694, 0.058910412825608854),
            (0.05878587154467074, 0.059894195069986944, 0.8245440666953955, 0.05677586668994686),
            (0.8286700644885658, 0.06201109193664397, 0.052136689058011124, 0.05718215451677901),
            (0.3040835837400583, 0.6355215105837612, 0.0005004334442719462, 0.05989447223190859),
        ],
        [0.0012846968603334157, 0.0020006320313699726, 0.0038694682213103733, 0.0037352275658985522, 0.0038818311595532973, 0.00455498571960775, 0.004799380599205763, 0.007165193660663452, 0.00879694427559229, 0.006973088601266735, 0.0034520136939604758, 0.010050252598534957, 0.011118534527621973, 0.005235187909249949, 0.004718797935322103, 0.011123248236813455, 0.010698139822576657, 0.01372302813009499, 0.0034787841936317, 0.004093738314328881, 0.0037247785804307007, 0.0036967198625353008, 0.006155968185239756, 0.002783666843940808, 0.005632644217125172, 0.004676863052322176, 0.003515460973646426, 0.0034317247720467635, 0.0032004686326964718, 0.0030095129140263054, 0.002085684575720108],
    ),
    8: (
        [
            (0.024973319795410398, 0.00885559427870506, 0.01760715612687784, 0.9485639297990067),
            (0.04335349916535902, 0.03620467192851835, 0.1890744688700333, 0.7313673600360893),
            (0.15234419648302822, 0.6113365336918841, 0.23074349679464926, 0.005575773030438409),
            (0.4798758072429832, 0.027776757993565215, 0.025806848872532543, 0.466540585890919),
            (0.04553064939700313, 0.15648668504006616, 0.04648612941109261, 0.7514965361518381),
            (0.013023652557712984, 0.1955460819226021, 0.2496370830578755, 0.5417931824618094),
            (0.1922431395602754, 0.04149415901827836, 0.049085344327496214, 0.71717735709395),
            (0.5087099384866778, 0.2209774649988179, 0.25791667315430905, 0.01239592336019517),
            (0.04700186303213982, 0.41507658426998884, 0.04312238337787983, 0.49479916931999146),
            (0.0005910108638147449, 0.4794066533528657, 0.1999067290329215, 0.3200956067503981),
            (0.4101223362011024, 0.06224439946102038, 0.12397848932781849, 0.4036547750100588),
            (0.24800208480487662, 0.21251922611752927, 0.03383673809722409, 0.50564195098037),
            (0.13811041316803896, 0.3972754574614429, 0.38288050116572697, 0.08173362820479123),
            (0.04675241164180488, 0.045447374262858636, 0.4721332195496735, 0.43566699454566293),
            (0.25107965333836524, 0.2161396926300792, 0.4935900808340201, 0.03919057319753547),
            (0.2113370358593134, 0.04529074988858345, 0.25022744629303856, 0.49314476795906453),
            (0.32739921849377573, 0.42840777073601877, 0.1822460492233609, 0.061946961546844675),
            (0.5012614462694087, 0.14251462990889474, 0.22808018405507902, 0.12814373976661753),
            (0.5285689475695134, 0.1812621911709455, 0.030822472099930817, 0.25934638915961017),
            (0.3358781772939643, 0.2495207660799525, 0.16469550590032833, 0.24990555072575493),
            (0.196108425688311, 0.48622524586615984, 0.04243030114562272, 0.27523602729990654),
            (0.12325271447174402, 0.22746204998675507, 0.20033070687780316, 0.4489545286636978),
            (0.22245296786507385, 0.1582590933458903, 0.41189620364841234, 0.20739173514062345),
            (0.23052595611283233, 0.02882725890093535, 0.5111060719135768, 0.22954071307265547),
            (0.04492354732793469, 0.22954061506357473, 0.4835182802910101, 0.2420175573174804),
            (0.10642416182205339, 0.4853135576380693, 0.2096423028706461, 0.19861997766923117),
            (0.5044825259532403, 0.02261090963666032, 0.25047192191732087, 0.22243464249277858),
            (0.03833926064005477, 0.7205111657178718, 0.036780649734748004, 0.2043689239073254),
            (0.06745093111152234, 0.46531516041303644, 0.4618117251682628, 0.005422183307178327),
            (0.7369691657004187, 0.03938021868450567, 0.05045500693172462, 0.17319560868335104),
            (0.04269156560277332, 0.04543453035210954, 0.7485745607457632, 0.16329934329935397),
            (0.4081931754790794, 0.4246500540795893, 0.03095052921613307, 0.13620624122519828),
            (0.6780990703692413, 0.21626414889065138, 0.05438301560623372, 0.05125376513387359),
            (0.046982756907513856, 0.20449181374722303, 0.7016567760643899, 0.046868653280873175),
            (0.17965580975017104, 0.719573330071695, 0.04478021549603192, 0.05599064468210203),
            (0.18659110835763626, 0.04620058214866435, 0.7237094950417491, 0.0434988144519503),
            (0.4557957063325977, 0.5003296720329765, 0.03576257087871995, 0.008112050755705822),
            (0.4644863283559173, 0.04105029814548233, 0.44877800775248244, 0.04568536574611797),
            (0.7612743156128261, 0.03985667792342308, 0.16438693098480814, 0.03448207547894267),
            (0.0345560133354188, 0.7623678849544528, 0.15063771178142532, 0.05243838992870311),
            (0.008065883812070296, 0.4982549617822042, 0.4139212834388202, 0.07975787096690537),
            (0.9245777398898001, 0.04868900463902198, 0.004571184374515664, 0.022162071096662333),
            (0.02241987057031325, 0.03005224777593296, 0.9408082028316007, 0.006719678822153121),
            (0.02563851134138384, 0.9573816260583028, 0.0009718783690151368, 0.016007984231298258),
        ],
        [0.0002908639225509423, 0.0025106282475171864, 0.0016460861324811204, 0.0016881535417914368, 0.002935422697522246, 0.0026027315339634395, 0.002998148316309992, 0.002754894466758719, 0.0037507609946701857, 0.00213323056210327, 0.0045424893224121805, 0.005382166773474392, 0.004697614316667839, 0.004026390654635601, 0.005373542223987903, 0.006091681784605511, 0.006927915069245572, 0.006510451658158444, 0.004189847678431446, 0.00881048811767084, 0.0054545457922569145, 0.009298747966287914, 0.008892300407975904, 0.004519589747580935, 0.006683134190221676, 0.008629937323168075, 0.003790620105750612, 0.0024533178625712085, 0.00114957138606261, 0.0028292048763357944, 0.0028982004270852457, 0.0037598731255837274, 0.003916487256448845, 0.0033577851411315716, 0.003424172724093781, 0.0029831339678821497, 0.001253525058643469, 0.0036540831010869316, 0.002289295426380907, 0.0025647409020684805, 0.001977570116178874, 0.000424483419890496, 0.00034651409450314687, 0.0002523242325191771],
    ),
    9: (
        [
            (0.012542466103274807, 0.22334766781360066, 0.040385771276057775, 0.7237240948070668),
            (0.04078275605402759, 0.04206648540987764, 0.041954732007686804, 0.875196026528408),
            (0.04411116572866147, 0.014923823978476733, 0.21335378046222167, 0.7276112298306402),
            (0.47547205028484185, 0.03967712051591489, 0.01167918776735346, 0.4731716414318898),
            (0.21306583074243834, 0.03313166695541837, 0.0401113782404464, 0.7136911240616969),
            (0.1115299105896288, 0.18095213245167027, 0.02545934399020707, 0.6820586129684939),
            (0.24377863951134648, 0.1432143403978235, 0.6123408021820863, 0.0006662179087436213),
            (0.004136110590134967, 0.194621680265471, 0.38073703494152733, 0.42050517420286676),
            (0.11194229159978364, 0.4350661767994385, 0.005807381258552151, 0.44718415034222575),
            (0.348582203891851, 0.41678208332525224, 0.22683731996430076, 0.007798392818596011),
            (0.027204332494956907, 0.1242856487305184, 0.19237179527014758, 0.6561382235043771),
            (0.019721269004943642, 0.4443452478104636, 0.06107660031735779, 0.47485688286723493),
            (0.4898498586599018, 0.13288343303959077, 0.356752136898719, 0.02051457140178845),
            (0.23009532210635797, 0.015520115992182865, 0.3619508813743888, 0.39243368052707045),
            (0.04149413919591671, 0.036675464890135095, 0.4582446695135363, 0.46358572640041185),
            (0.662809659333677, 0.23131424887153193, 0.10301151380639466, 0.0028645779883964004),
            (0.1840579466705563, 0.05281258992885335, 0.18398539091736932, 0.579144072483221),
            (0.4357885375052559, 0.027432715213856887, 0.12423562298820187, 0.41254312429268536),
            (0.30446576218201415, 0.17990450159705018, 0.03912033521689184, 0.4765094010040438),
            (0.11352499128194393, 0.22715986931503285, 0.1417161598745218, 0.5175989795285014),
            (0.03933009444413993, 0.374496979076987, 0.22224757371626447, 0.3639253527626086),
            (0.14419777989079796, 0.36015671321152687, 0.4587456757955503, 0.03689983110212483),
            (0.35184795846047, 0.22898400907069308, 0.33643452712150773, 0.08273350534732914),
            (0.19559156622241658, 0.3336191905680226, 0.2709662131081066, 0.19982303010145427),
            (0.18242439019785073, 0.5729563685802237, 0.16687497287067898, 0.07774426835124662),
            (0.6057738525339251, 0.14768706810147117, 0.15246831717352372, 0.09407076219107997),
            (0.1912057452329443, 0.4222286016719214, 0.08342378852063628, 0.30314186457449793),
            (0.05935503383799701, 0.4147619222990371, 0.3633566801123644, 0.16252636375060145),
            (0.4187527770449482, 0.35370035843453856, 0.10961245832859, 0.11793440619192326),
            (0.34371349503612547, 0.16506284090730555, 0.1819772234774806, 0.30924644057908834),
            (0.1308318772043644, 0.14348292241970698, 0.3787443941211687, 0.3469408062547598),
            (0.5880484699622863, 0.1306656875755303, 0.04580873781449253, 0.23547710464769087),
            (0.18793169741782667, 0.13250438541905574, 0.5571603219749479, 0.12240359518816968),
            (0.40330859409596753, 0.3394322940952808, 0.015389599810667438, 0.24186951199808424),
            (0.3964123670442985, 0.05503739382968048, 0.3516091771883739, 0.19694106193764704),
            (0.04884167433931941, 0.6454494634370022, 0.10315714682827427, 0.20255171539540415),
            (0.028649249284109835, 0.7203807203359196, 0.006891366839295273, 0.24407866354067528),
            (0.03404822893107995, 0.044831059151109964, 0.7098027195586392, 0.21131799235917098),
            (0.03244717556381338, 0.21584553352671937, 0.5655163520825289, 0.18619093882693827),
            (0.1742700233240555, 0.01758681325508149, 0.6044262999606026, 0.20371686346026044),
            (0.7445722864134562, 0.02302476689782919, 0.03138783669262676, 0.20101510999608785),
            (0.07009294573746905, 0.633534755777452, 0.27607743982347144, 0.020294858661607504),
            (0.6247618080740249, 0.02094427630108399, 0.18385499781762557, 0.1704389178072655),
            (0.20189659429100526, 0.6443583098389681, 0.019650560420840107, 0.13409453544918645),
            (0.20020299852059376, 0.7378984493750678, 0.05137368203860862, 0.01052487006572985),
            (0.006451911226469043, 0.5866194063678511, 0.2737549691522872, 0.13317371325339267),
            (0.045283847725712256, 0.18714729211454917, 0.7304989942620463, 0.0370698658976922),
            (0.4457118686463898, 0.4837323966974715, 0.033327203203756414, 0.037228531452382335),
            (0.7083661953630629, 0.03171156153538289, 0.23077311207171017, 0.029149131029844073),
            (0.178587657844265, 0.030209714970183987, 0.7518893444883038, 0.03931328269724723),
            (0.024169939568873033, 0.783023838067657, 0.15557890830272564, 0.03722731406074443),
            (0.4254155086922857, 0.0244822382813637, 0.5007701133228336, 0.04933213970351693),
            (0.01111917666997142, 0.4405214048473234, 0.5152850615572768, 0.03307435692542833),
            (0.7094855723870963, 0.21830355054839526, 0.008373268951130641, 0.06383760811337774),
            (0.8689419994744351, 0.04589832979249507, 0.04585901947602266, 0.039300651257047216),
            (0.04324575722503787, 0.8739842844692829, 0.03474022441842879, 0.04802973388725039),
            (0.03461939946660608, 0.03746715582104099, 0.8847735952623148, 0.04313984945003813),
        ],
        [0.0009750266138313081, 0.001182281355818436, 0.0011842966827062468, 0.001199964370174361, 0.001960422756541085, 0.0020954845204123143, 0.0013133568297041519, 0.0016375601841337013, 0.0016299004290249853, 0.0023777410142237962, 0.0024825913917853933, 0.0019374921889016873, 0.002214375065161271, 0.0025197964986007552, 0.0026195628789069552, 0.0013663833806215097, 0.004380082113958093, 0.003314801767761802, 0.0043959314029942825, 0.005439951471336872, 0.004215437802807637, 0.004232085234391216, 0.005870060438901916, 0.006979224618881528, 0.005307550768351461, 0.004687869774289423, 0.0063701809856589, 0.004275313663630231, 0.005879894123846899, 0.008183687426958103, 0.00753523051320257, 0.0038349148702950557, 0.005952755449705823, 0.0027458984630146298, 0.005520179070379666, 0.0037301185028777236, 0.0007162016044045415, 0.002164588522968254, 0.0035590499516530497, 0.002162543037223975, 0.0011744621157262522, 0.0017185809772670593, 0.002279539234758831, 0.0025639554658188723, 0.0011900066193666033, 0.0011719418824443467, 0.0021809782571800417, 0.0022123193411248874, 0.0015275323992156769, 0.001524428447483085, 0.000907777114462998, 0.0022051838176079573, 0.0011001900925731805, 0.0013827059604750308, 0.0013368684225426673, 0.0011235667369375686, 0.0009168420416400244],
    ),
    10: (
        [
            (0.11904473103920776, 0.5325889236500518, 0.11212438646497919, 0.2362419588457611),
            (0.11212438646512757, 0.11904473103927615, 0.5325889236499355, 0.23624195884566074),
            (0.5325889236499959, 0.11212438646502285, 0.11904473103928254, 0.23624195884569874),
            (0.36961264485592327, 0.4908953467609972, 0.1145379863158413, 0.024954022067238173),
            (0.11453798631598999, 0.36961264485621703, 0.490895346760553, 0.024954022067240008),
            (0.4908953467606624, 0.11453798631602444, 0.3696126448561479, 0.02495402206716529),
            (0.031181318752237952, 0.030701960870696293, 0.12663949087887122, 0.8114772294981946),
            (0.1266394908790731, 0.03118131875221094, 0.03070196087074502, 0.811477229497971),
            (0.030701960870726186, 0.12663949087858195, 0.03118131875220208, 0.8114772294984898),
            (0.01735404744577196, 0.32998418756342823, 0.6202583012898869, 0.0324034637009128),
            (0.6202583012895786, 0.017354047445783616, 0.3299841875637115, 0.03240346370092626),
            (0.329984187563348, 0.620258301290051, 0.017354047445684417, 0.03240346370091648),
            (0.11932259349189411, 0.29863508978936404, 0.45348592435878937, 0.12855639235995253),
            (0.4534859243589847, 0.11932259349191676, 0.2986350897893352, 0.12855639235976332),
            (0.29863508978930664, 0.45348592435899376, 0.11932259349174155, 0.12855639235995805),
            (0.01680959146966088, 0.41747625187081, 0.4043770144883686, 0.1613371421711605),
            (0.4043770144883625, 0.0168095914696485, 0.4174762518709081, 0.1613371421710809),
            (0.4174762518709598, 0.4043770144883664, 0.01680959146959897, 0.16133714217107478),
            (0.15116457208129996, 0.035189582268768005, 0.7805722458243887, 0.03307359982554336),
            (0.7805722458240748, 0.15116457208163975, 0.035189582268708414, 0.033073599825577046),
            (0.03518958226875868, 0.7805722458241509, 0.15116457208151765, 0.03307359982557276),
            (0.16961384756041276, 0.02309725877556984, 0.6339280343903574, 0.17336085927365993),
            (0.633928034390317, 0.16961384756039496, 0.023097258775556496, 0.1733608592737316),
            (0.023097258775537477, 0.6339280343903015, 0.1696138475604024, 0.17336085927375852),
            (0.02434102832028473, 0.1770183510189176, 0.6335875653143981, 0.16505305534639958),
            (0.6335875653144045, 0.024341028320273517, 0.1770183510189469, 0.16505305534637507),
            (0.17701835101896712, 0.6335875653142613, 0.024341028320264187, 0.16505305534650738),
            (0.5860145555271175, 0.3510309266619135, 0.03029393775770429, 0.03266058005326478),
            (0.03029393775768674, 0.5860145555272516, 0.3510309266617718, 0.0326605800532899),
            (0.35103092666152924, 0.030293937757721268, 0.5860145555274774, 0.032660580053272124),
            (0.06662644225741854, 0.3283455214738415, 0.3020019073266452, 0.30302612894209485),
            (0.3020019073269149, 0.06662644225740186, 0.32834552147382845, 0.3030261289418548),
            (0.328345521473865, 0.3020019073267441, 0.06662644225731273, 0.3030261289420782),
            (0.16454721589004118, 0.01267643164855109, 0.4137011284495365, 0.4090752240118713),
            (0.4137011284495913, 0.16454721588991525, 0.012676431648545651, 0.40907522401194785),
            (0.012676431648547704, 0.4137011284494347, 0.16454721589001106, 0.4090752240120066),
            (0.1286811682481862, 0.33951306262113806, 0.12071311163580885, 0.4110926574948669),
            (0.1207131116360094, 0.12868116824813045, 0.33951306262090203, 0.4110926574949581),
            (0.3395130626209395, 0.12071311163585552, 0.12868116824819364, 0.41109265749501134),
            (0.7282094809971639, 0.08302494688216785, 0.1502687902517038, 0.038496781868964484),
            (0.15026879025161544, 0.7282094809974273, 0.08302494688196338, 0.038496781868993885),
            (0.08302494688218065, 0.15026879025175532, 0.728209480997069, 0.038496781868995106),
            (0.24416971105589547, 0.13246701074477157, 0.5159168166142745, 0.10744646158505845),
            (0.5159168166143, 0.244169711055904, 0.132467010744642, 0.10744646158515397),
            (0.13246701074470213, 0.5159168166144412, 0.24416971105566462, 0.10744646158519194),
            (0.17721437307267862, 0.41260083617916976, 0.01228042856243453, 0.39790436218571706),
            (0.012280428562525536, 0.1772143730727065, 0.4126008361792022, 0.39790436218556574),
            (0.41260083617922017, 0.012280428562444143, 0.17721437307274238, 0.39790436218559333),
            (0.033515635505448005, 0.8149022829405029, 0.03220528641771429, 0.11937679513633484),
            (0.03220528641771225, 0.033515635505419805, 0.8149022829407983, 0.11937679513606968),
            (0.8149022829409925, 0.03220528641772859, 0.03351563550541738, 0.11937679513586148),
            (0.17400376545463803, 0.02935511686041803, 0.17579960724930233, 0.6208415104356416),
            (0.17579960724932753, 0.17400376545457868, 0.02935511686037185, 0.6208415104357219),
            (0.029355116860380837, 0.1757996072492149, 0.17400376545462784, 0.6208415104357764),
            (0.032984059987658965, 0.5992738011392268, 0.031144612490086834, 0.3365975263830275),
            (0.031144612490100476, 0.03298405998767667, 0.5992738011395163, 0.3365975263827066),
            (0.5992738011397304, 0.03114461249007837, 0.032984059987679365, 0.3365975263825119),
            (0.033779125591133496, 0.03573908441154147, 0.33794891982642755, 0.5925328701708975),
            (0.33794891982662234, 0.03377912559111836, 0.035739084411545455, 0.5925328701707139),
            (0.03573908441154283, 0.3379489198260949, 0.03377912559113953, 0.5925328701712227),
            (0.25214086584314566, 0.18076024957022702, 0.5596600888554598, 0.007438795731167458),
            (0.5596600888554231, 0.25214086584332107, 0.18076024957005654, 0.007438795731199276),
            (0.18076024957004921, 0.5596600888557024, 0.2521408658430337, 0.007438795731214607),
            (0.03854556569738887, 0.006667080448349849, 0.9467198482923568, 0.008067505561904541),
            (0.9467198482921867, 0.0385455656973747, 0.006667080448658958, 0.008067505561779615),
            (0.006667080448493845, 0.9467198482918519, 0.038545565697480216, 0.008067505562174008),
            (0.00382689193316732, 0.10359366024755484, 0.8740251327649323, 0.018554315054345554),
            (0.8740251327646161, 0.0038268919330440715, 0.10359366024800282, 0.018554315054336988),
            (0.10359366024744554, 0.8740251327651678, 0.003826891933029423, 0.01855431505435718),
            (0.257071980762559, 0.2570719807625508, 0.2570719807624278, 0.22878405771246252),
            (0.004844889527920282, 0.0048448895275724265, 0.004844889527767339, 0.98546533141674),
            (0.16695976931710121, 0.16695976931758033, 0.16695976931720635, 0.49912069204811216),
            (0.3182062008204549, 0.31820620082059226, 0.31820620082032386, 0.045381397538629),
            (0.13365994953246896, 0.13365994953261112, 0.13365994953239227, 0.5990201514025276),
        ],
        [0.0034450988893350233, 0.0034450988893420763, 0.0034450988893415108, 0.0020646607776616775, 0.002064660777662243, 0.0020646607776578416, 0.0011033909837480282, 0.0011033909837487549, 0.001103390983747505, 0.0010231923733075206, 0.0010231923733079607, 0.0010231923733042467, 0.004234512641860647, 0.004234512641859515, 0.00423451264185865, 0.0020946859843752746, 0.002094685984373118, 0.002094685984369901, 0.0011641601674995908, 0.001164160167500397, 0.0011641601675006054, 0.0021914196944406708, 0.0021914196944394335, 0.00219141969443908, 0.0022844507802897937, 0.0022844507802891926, 0.002284450780288397, 0.001522996656033315, 0.001522996656034061, 0.0015229966560349059, 0.004471157472950422, 0.004471157472951483, 0.0044711574729520125, 0.0018736985584844315, 0.0018736985584823453, 0.0018736985584836005, 0.00468209374248614, 0.004682093742490224, 0.004682093742491073, 0.002083913166716667, 0.0020839131667141574, 0.0020839131667152884, 0.004553883199161185, 0.004553883199161751, 0.0045538831991633775, 0.001969493864818553, 0.0019694938648253234, 0.0019694938648199675, 0.0011914619091077893, 0.00119146190910661, 0.0011914619091069778, 0.002777404909179491, 0.0027774049091755315, 0.0027774049091761855, 0.00169583101522394, 0.001695831015225121, 0.0016958310152242653, 0.0018987030975037976, 0.0018987030975030198, 0.001898703097504045, 0.0013686745541350686, 0.001368674554136909, 0.0013686745541372201, 0.00013168318579095443, 0.00013168318579197532, 0.0001316831857927754, 0.00028209430652597543, 0.0002820943065245259, 0.000282094306524114, 0.007763086997403196, 6.365271938318005e-05, 0.001959184315344774, 0.00465192794803736, 0.0019028288945829596],
    ),
    11: (
        [
            (0.019511304085427783, 0.11602308185442484, 0.7288732494846534, 0.1355923645754939),
            (0.7288732494847601, 0.01951130408545612, 0.11602308185431132, 0.13559236457547247),
            (0.1160230818543504, 0.7288732494841443, 0.019511304085399576, 0.13559236457610566),
            (0.01214887718919011, 0.00762104076479353, 0.47339272628239604, 0.5068373557636203),
            (0.47339272628195017, 0.012148877189292152, 0.007621040764693918, 0.5068373557640637),
            (0.007621040764078102, 0.47339272628301493, 0.012148877189241914, 0.5068373557636651),
            (0.33896097038251494, 0.3633475256969009, 0.01688864018976828, 0.280802863730816),
            (0.01688864018983871, 0.33896097038214285, 0.36334752569762385, 0.28080286373039454),
            (0.3633475256979243, 0.01688864018974734, 0.3389609703820724, 0.280802863730256),
            (0.14405496229613823, 0.017304895837622403, 0.6808607451345954, 0.15777939673164393),
            (0.6808607451342524, 0.14405496229637949, 0.01730489583748772, 0.15777939673188032),
            (0.017304895837464862, 0.680860745134503, 0.14405496229628598, 0.15777939673174618),
            (0.23847436468429828, 0.14299464016654803, 0.4741821286458546, 0.14434886650329912),
            (0.4741821286460376, 0.23847436468459363, 0.14299464016643398, 0.14434886650293477),
            (0.14299464016632557, 0.4741821286455784, 0.2384743646842464, 0.14434886650384965),
            (0.025706717878954732, 0.017798389792362868, 0.8111989814430212, 0.14529591088566127),
            (0.8111989814431149, 0.025706717879010892, 0.017798389792311, 0.14529591088556326),
            (0.01779838979234505, 0.8111989814422269, 0.025706717879022806, 0.14529591088640528),
            (0.17898218571028868, 0.029517742503273686, 0.4945020621274045, 0.2969980096590331),
            (0.494502062127154, 0.17898218570986293, 0.029517742503528392, 0.29699800965945466),
            (0.029517742503467503, 0.4945020621265335, 0.17898218570925364, 0.2969980096607453),
            (0.1524656156299311, 0.26899330170848906, 0.5563518694315875, 0.0221892132299923),
            (0.5563518694313394, 0.15246561562986446, 0.26899330170877683, 0.022189213230019256),
            (0.2689933017086491, 0.556351869431363, 0.15246561562987854, 0.02218921323010927),
            (0.029286198964321275, 0.027238443897230256, 0.12133819923365237, 0.8221371579047961),
            (0.12133819923356093, 0.029286198964183094, 0.027238443897311032, 0.8221371579049449),
            (0.027238443897533715, 0.12133819923719935, 0.02928619896452765, 0.8221371579007393),
            (0.19783954706655993, 0.544675004555141, 0.029602725867073635, 0.2278827225112254),
            (0.029602725867109436, 0.19783954706604034, 0.5446750045559757, 0.22788272251087446),
            (0.5446750045560496, 0.029602725867036578, 0.19783954706630108, 0.2278827225106128),
            (0.12629940649021265, 0.011867433748394607, 0.828341131139443, 0.03349202862194973),
            (0.8283411311392355, 0.12629940649028656, 0.011867433748569817, 0.03349202862190809),
            (0.011867433748512513, 0.8283411311393324, 0.12629940649028873, 0.03349202862186644),
            (0.3371690700776324, 0.0322988133183324, 0.49848205033239057, 0.13205006627164464),
            (0.498482050332438, 0.33716907007769203, 0.032298813318283506, 0.13205006627158647),
            (0.03229881331826745, 0.4984820503329196, 0.33716907007716884, 0.13205006627164403),
            (0.34650537265070847, 0.5566694034766595, 0.01942383515148004, 0.07740138872115201),
            (0.019423835151453295, 0.34650537265091935, 0.5566694034765997, 0.0774013887210277),
            (0.5566694034766189, 0.019423835151550828, 0.3465053726511217, 0.07740138872070867),
            (0.15732456624326452, 0.09328386025279917, 0.7375158260909281, 0.011875747413008194),
            (0.7375158260904966, 0.15732456624323252, 0.09328386025323455, 0.011875747413036375),
            (0.09328386025315205, 0.7375158260902059, 0.15732456624296454, 0.011875747413677525),
            (0.028419497023646434, 0.03388950667075005, 0.28016644454533174, 0.6575245517602718),
            (0.28016644454504525, 0.02841949702363619, 0.033889506670834964, 0.6575245517604836),
            (0.033889506670815805, 0.28016644454859263, 0.02841949702328558, 0.6575245517573061),
            (0.30068980385537514, 0.31077442366918473, 0.12754562736156475, 0.26099014511387547),
            (0.12754562736147013, 0.3006898038543991, 0.3107744236696467, 0.26099014511448404),
            (0.3107744236697626, 0.1275456273614466, 0.3006898038549699, 0.2609901451138209),
            (0.1115967035329517, 0.2864949113775318, 0.49108805261786653, 0.11082033247164988),
            (0.49108805261808663, 0.1115967035331357, 0.2864949113772423, 0.11082033247153537),
            (0.2864949113772569, 0.4910880526179629, 0.11159670353301336, 0.11082033247176686),
            (0.11488219678196299, 0.12553611316683969, 0.46011130467502154, 0.29947038537617576),
            (0.46011130467503636, 0.11488219678178335, 0.12553611316728214, 0.29947038537589815),
            (0.12553611316750812, 0.460111304673332, 0.11488219678149489, 0.299470385377665),
            (0.25076160992013785, 0.2500532412374494, 0.04060424219112394, 0.4585809066512888),
            (0.040604242190995565, 0.25076160992011653, 0.25005324123763345, 0.45858090665125456),
            (0.2500532412376948, 0.040604242191005835, 0.25076160992090646, 0.45858090665039286),
            (0.30857342082114636, 0.02344611593205037, 0.635319477206719, 0.03266098604008425),
            (0.6353194772067001, 0.3085734208211991, 0.02344611593211149, 0.03266098603998934),
            (0.02344611593209034, 0.6353194772067752, 0.30857342082123396, 0.032660986039900544),
            (0.09261674502327066, 0.09029353562634984, 0.30909368023653183, 0.5079960391138477),
            (0.30909368023669015, 0.0926167450230191, 0.09029353562658446, 0.5079960391137063),
            (0.09029353562572928, 0.30909368023533035, 0.09261674502310309, 0.5079960391158372),
            (0.12075125363897865, 0.10023547459868559, 0.67783513645382, 0.1011781353085158),
            (0.6778351364537606, 0.12075125363903058, 0.10023547459853442, 0.10117813530867441),
            (0.10023547459858972, 0.6778351364529376, 0.12075125363867524, 0.1011781353097975),
            (0.1579550425983428, 0.15492858740134482, 0.012160089235342656, 0.6749562807649697),
            (0.012160089235280558, 0.15795504259793852, 0.15492858740173535, 0.6749562807650455),
            (0.1549285874018519, 0.012160089235160862, 0.15795504259864215, 0.6749562807643451),
            (0.3354607968314063, 0.13810694191731232, 0.49369562707905945, 0.03273663417222195),
            (0.493695627078907, 0.3354607968315431, 0.13810694191741302, 0.03273663417213683),
            (0.13810694191743755, 0.49369562707892767, 0.33546079683143365, 0.03273663417220115),
            (0.010012422257141051, 0.11689819669336698, 0.42262104589904614, 0.4504683351504458),
            (0.422621045899092, 0.010012422257116939, 0.11689819669338873, 0.45046833515040235),
            (0.1168981966935504, 0.42262104589872845, 0.010012422256932357, 0.45046833515078877),
            (0.4058583387156026, 0.10552193042136163, 0.006072578389161989, 0.48254715247387375),
            (0.006072578388626848, 0.4058583387143239, 0.10552193042126365, 0.48254715247578556),
            (0.10552193042117708, 0.006072578389145461, 0.40585833871604, 0.48254715247363744),
            (0.02662451216402051, 0.038842864624960394, 0.9066200210889223, 0.02791260212209676),
            (0.9066200210889783, 0.02662451216400032, 0.03884286462495582, 0.027912602122065523),
            (0.03884286462491071, 0.9066200210888383, 0.02662451216400486, 0.027912602122246163),
            (0.03170450282669324, 0.1851613866917053, 0.7570556764755155, 0.02607843400608591),
            (0.7570556764755351, 0.031704502826692, 0.18516138669167356, 0.026078434006099372),
            (0.18516138669152504, 0.7570556764755849, 0.0317045028266909, 0.026078434006199178),
            (0.03484202370322931, 0.03707747991970323, 0.6133555859872731, 0.31472491038979433),
            (0.6133555859872677, 0.034842023703194655, 0.03707747991972069, 0.314724910389817),
            (0.0370774799197896, 0.6133555859856408, 0.034842023703217435, 0.3147249103913522),
            (0.4336893678647997, 0.5280535337863633, 0.034132123840565055, 0.004124974508271822),
            (0.03413212384063247, 0.4336893678650323, 0.5280535337860732, 0.004124974508262032),
            (0.528053533785941, 0.03413212384063699, 0.43368936786546924, 0.0041249745079527935),
            (0.02174356161965596, 0.021743561621234943, 0.021743561619746617, 0.9347693151393625),
            (0.11396953481233196, 0.11396953481160853, 0.1139695348123683, 0.6580913955636912),
            (0.32777111272416626, 0.3277711127240468, 0.32777111272420667, 0.016686661827580253),
            (0.2960084699133574, 0.2960084699134846, 0.29600846991347096, 0.111974590259687),
            (0.1968268645046296, 0.19682686450448997, 0.1968268645044537, 0.40951940648642665),
        ],
        [0.0010621542172256201, 0.0010621542172265198, 0.0010621542172285492, 0.00024392157839704987, 0.00024392157839779765, 0.00024392157838708142, 0.0016274985904982, 0.0016274985905059358, 0.0016274985904939979, 0.0011697598043740873, 0.001169759804371768, 0.0011697598043711175, 0.0032819671821101805, 0.0032819671821037455, 0.003281967182129802, 0.0005279920426308861, 0.0005279920426308739, 0.0005279920426343423, 0.0019496326390220989, 0.0019496326390307077, 0.001949632639048456, 0.0018737072129858276, 0.0018737072129849965, 0.0018737072129913254, 0.0007232685232705273, 0.0007232685232691291, 0.0007232685232867024, 0.0020715041247248043, 0.0020715041247253347, 0.0020715041247229833, 0.0004426544798853675, 0.0004426544798888783, 0.00044265447988711763, 0.002149806605781453, 0.0021498066057806576, 0.002149806605784688, 0.0013841486140259746, 0.0013841486140256192, 0.0013841486140304345, 0.0008570829478892289, 0.0008570829478907705, 0.0008570829479115878, 0.0010556629969891741, 0.0010556629969899025, 0.0010556629969665661, 0.004597380383431185, 0.004597380383432086, 0.004597380383433341, 0.003341725238215786, 0.003341725238208397, 0.003341725238210182, 0.0036081871202102993, 0.0036081871202086548, 0.0036081871202163097, 0.0028928877153598736, 0.0028928877153485775, 0.0028928877153538628, 0.0010128681282520922, 0.0010128681282524036, 0.0010128681282489704, 0.002901805658677704, 0.002901805658680232, 0.0029018056586740796, 0.0025340992258323187, 0.002534099225833397, 0.0025340992258317888, 0.0012002940735026388, 0.00120029407349782, 0.0012002940734976608, 0.002597120471219274, 0.002597120471214784, 0.0025971204712212717, 0.0012042571262568939, 0.0012042571262564925, 0.0012042571262456633, 0.0008522585433649744, 0.0008522585433395238, 0.0008522585433632013, 0.00046562748965351417, 0.0004656274896527381, 0.00046562748965519175, 0.0010128422505929528, 0.0010128422505930501, 0.001012842250596407, 0.0015051557681943562, 0.0015051557681955213, 0.0015051557682016642, 0.0005450543594640892, 0.000545054359463543, 0.0005450543594569916, 0.00018520507764804156, 0.0029993712524892515, 0.0019395846640396248, 0.004960765552103519, 0.004504764784266664],
    ),
    12: (
        [
            (0.035420418220240224, 0.43127482811150725, 0.5224715513554018, 0.010833202312850752),
            (0.5224715513554021, 0.03542041822023706, 0.4312748281115101, 0.010833202312850752),
            (0.4312748281115131, 0.5224715513554082, 0.035420418220232765, 0.010833202312845857),
            (0.6215211838824031, 0.028878003387744072, 0.10216956909428956, 0.24743124363556326),
            (0.10216956909429054, 0.6215211838824056, 0.028878003387744523, 0.24743124363555932),
            (0.028878003387744156, 0.1021695690942831, 0.6215211838824011, 0.24743124363557165),
            (0.13499392760946538, 0.08955250910701396, 0.4106933140901512, 0.36476024919336947),
            (0.41069331409015275, 0.13499392760945989, 0.08955250910700871, 0.3647602491933786),
            (0.08955250910700774, 0.41069331409015175, 0.1349939276094581, 0.36476024919338235),
            (0.6014420504489677, 0.2600559873627517, 0.07656778420928399, 0.0619341779789966),
            (0.07656778420927268, 0.6014420504489667, 0.260055987362767, 0.06193417797899354),
            (0.2600559873627689, 0.0765677842092809, 0.6014420504489566, 0.06193417797899354),
            (0.3918753971997557, 0.25990315408583575, 0.11476751676310626, 0.23345393195130223),
            (0.11476751676309771, 0.39187539719976366, 0.2599031540858344, 0.23345393195130426),
            (0.259903154085834, 0.11476751676309899, 0.39187539719975684, 0.23345393195131015),
            (0.0133890508831076, 0.30506096657721055, 0.6550796310298418, 0.02647035150984007),
            (0.6550796310298466, 0.013389050883107628, 0.3050609665772057, 0.02647035150984007),
            (0.3050609665772145, 0.6550796310298344, 0.013389050883110442, 0.026470351509840683),
            (0.12064788144254002, 0.07994348658717365, 0.6021485466361711, 0.19726008533411524),
            (0.60214854663617, 0.12064788144253709, 0.07994348658717079, 0.19726008533412204),
            (0.07994348658716677, 0.6021485466361717, 0.12064788144253873, 0.19726008533412287),
            (0.11834290082100707, 0.020134335322814778, 0.5459504609989213, 0.31557230285725674),
            (0.5459504609989172, 0.11834290082101011, 0.020134335322812915, 0.31557230285725985),
            (0.020134335322812502, 0.5459504609989175, 0.1183429008210089, 0.31557230285726107),
            (0.015383269689721923, 0.23379217305788286, 0.48104263226980226, 0.2697819249825929),
            (0.4810426322698039, 0.015383269689724949, 0.23379217305788152, 0.26978192498258957),
            (0.23379217305788003, 0.481042632269803, 0.015383269689724822, 0.2697819249825922),
            (0.22744853680451593, 0.22084175931337113, 0.100249754372136, 0.4514599495099769),
            (0.1002497543721379, 0.22744853680451488, 0.22084175931337646, 0.4514599495099708),
            (0.2208417593133738, 0.10024975437213575, 0.2274485368045123, 0.4514599495099782),
            (0.31636176225630175, 0.13012709476202478, 0.42612797425565285, 0.12738316872602065),
            (0.4261279742556542, 0.31636176225630913, 0.13012709476202342, 0.1273831687260133),
            (0.1301270947620261, 0.4261279742556572, 0.31636176225630147, 0.12738316872601513),
            (0.7170766031009792, 0.12803632767886125, 0.07462605132720859, 0.08026101789295095),
            (0.07462605132721278, 0.7170766031009717, 0.1280363276788658, 0.08026101789294973),
            (0.12803632767886786, 0.07462605132721145, 0.717076603100971, 0.08026101789294973),
            (0.07116099648149965, 0.05919699437842141, 0.8519850489492443, 0.017656960190834663),
            (0.8519850489492472, 0.07116099648149825, 0.05919699437842108, 0.01765696019083344),
            (0.05919699437842196, 0.8519850489492479, 0.0711609964814968, 0.01765696019083344),
            (0.02332917891338071, 0.08568157353024361, 0.46416106080497516, 0.4268281867514006),
            (0.46416106080498254, 0.023329178913380627, 0.0856815735302423, 0.4268281867513945),
            (0.08568157353023764, 0.4641610608049875, 0.023329178913380353, 0.4268281867513945),
            (0.008827612647030691, 0.2324179989563867, 0.06123548744419518, 0.6975189009523874),
            (0.06123548744418805, 0.008827612647035035, 0.232417998956387, 0.6975189009523899),
            (0.23241799895639437, 0.06123548744418643, 0.008827612647032945, 0.6975189009523862),
            (0.019252703650583625, 0.1859004086837657, 0.29224826431062306, 0.5025986233550276),
            (0.292248264310628, 0.019252703650583056, 0.1859004086837668, 0.5025986233550221),
            (0.18590040868375968, 0.2922482643106337, 0.019252703650583874, 0.5025986233550227),
            (0.0985104014603122, 0.02435991006993623, 0.024615216819615825, 0.8525144716501357),
            (0.024615216819616204, 0.09851040146031526, 0.024359910069935996, 0.8525144716501325),
            (0.024359910069934765, 0.024615216819615045, 0.09851040146030464, 0.8525144716501455),
            (0.20891149684046229, 0.4045023685632664, 0.09476261902902025, 0.29182351556725106),
            (0.09476261902901273, 0.20891149684046767, 0.4045023685632759, 0.2918235155672437),
            (0.4045023685632634, 0.09476261902901938, 0.20891149684046714, 0.2918235155672501),
            (0.08004502188860652, 0.06201821930269111, 0.2962227950879482, 0.5617139637207542),
            (0.2962227950879459, 0.08004502188860081, 0.06201821930268866, 0.5617139637207647),
            (0.06201821930268758, 0.2962227950879416, 0.08004502188860688, 0.561713963720764),
            (0.1624334612403664, 0.009172080070074362, 0.34253199795015143, 0.48586246073940786),
            (0.34253199795014355, 0.1624334612403715, 0.009172080070074662, 0.4858624607394103),
            (0.009172080070073418, 0.3425319979501512, 0.16243346124036878, 0.48586246073940664),
            (0.017851304649209476, 0.02362764131444295, 0.6941399725295287, 0.2643810815068189),
            (0.6941399725295312, 0.017851304649210184, 0.02362764131444525, 0.26438108150681333),
            (0.023627641314444725, 0.6941399725295327, 0.0178513046492099, 0.26438108150681267),
            (0.38033606322624314, 0.2972901553171099, 0.02493156404027389, 0.29744221741637306),
            (0.024931564040273635, 0.3803360632262428, 0.29729015531710656, 0.29744221741637694),
            (0.2972901553171088, 0.024931564040272775, 0.3803360632262461, 0.29744221741637233),
            (0.018281352173221466, 0.5606658837700145, 0.2708902039289694, 0.15016256012779475),
            (0.27089020392896623, 0.018281352173222243, 0.5606658837700205, 0.15016256012779108),
            (0.5606658837700187, 0.2708902039289657, 0.01828135217322333, 0.1501625601277923),
            (0.017529562182597158, 0.5748727589136075, 0.3771063994176174, 0.030491279486177907),
            (0.37710639941761104, 0.0175295621825991, 0.5748727589136119, 0.030491279486177907),
            (0.5748727589136058, 0.3771063994176129, 0.017529562182601464, 0.030491279486179742),
            (0.01020607365506776, 0.48334269753205383, 0.029957554129591325, 0.476493674683287),
            (0.02995755412959089, 0.010206073655070091, 0.4833426975320465, 0.47649367468329257),
            (0.48334269753205394, 0.029957554129591855, 0.010206073655068443, 0.4764936746832858),
            (0.21143763455145714, 0.5267595669941992, 0.2363780333382917, 0.025424765116052007),
            (0.236378033338298, 0.21143763455146186, 0.5267595669941894, 0.025424765116050782),
            (0.5267595669941937, 0.2363780333382986, 0.21143763455145756, 0.02542476511605017),
            (0.02289609338296772, 0.004579555742878494, 0.9546184848667288, 0.017905866007424973),
            (0.9546184848667325, 0.022896093382968538, 0.004579555742875771, 0.017905866007423138),
            (0.0045795557428768285, 0.954618484866734, 0.022896093382966744, 0.017905866007422527),
            (0.6956093147224811, 0.0256118593510931, 0.16333095462718963, 0.11544787129923617),
            (0.16333095462719038, 0.6956093147224813, 0.025611859351092822, 0.11544787129923556),
            (0.02561185935109389, 0.16333095462719083, 0.695609314722476, 0.11544787129923922),
            (0.12460329635035405, 0.402881624628451, 0.44631551826494237, 0.026199560756252613),
            (0.44631551826494664, 0.12460329635035572, 0.402881624628445, 0.026199560756252613),
            (0.40288162462844845, 0.44631551826495136, 0.1246032963503482, 0.026199560756252002),
            (0.1341799864280997, 0.23164769521725376, 0.507548605120255, 0.12662371323439148),
            (0.5075486051202582, 0.13417998642809736, 0.23164769521725104, 0.1266237132343933),
            (0.23164769521725015, 0.5075486051202592, 0.13417998642809545, 0.12662371323439514),
            (0.023495013000035314, 0.03438582765934761, 0.8430325460783396, 0.09908661326227754),
            (0.843032546078345, 0.023495013000034943, 0.03438582765934684, 0.09908661326227326),
            (0.03438582765934728, 0.8430325460783443, 0.023495013000035807, 0.09908661326227265),
            (0.15261391347076603, 0.027420024867732956, 0.11831715754265454, 0.7016489041188465),
            (0.11831715754265748, 0.15261391347076506, 0.027420024867731586, 0.7016489041188458),
            (0.027420024867733872, 0.11831715754265072, 0.1526139134707659, 0.7016489041188495),
            (0.2029542379812188, 0.6898395103699009, 0.08312515611213872, 0.024081095536741644),
            (0.08312515611214144, 0.20295423798122125, 0.6898395103698951, 0.024081095536742255),
            (0.6898395103698978, 0.08312515611213978, 0.2029542379812202, 0.024081095536742255),
            (0.028755847153971392, 0.36700989373749937, 0.48910981472679954, 0.11512444438172974),
            (0.4891098147268008, 0.028755847153970865, 0.367009893737501, 0.11512444438172728),
            (0.3670098937374999, 0.48910981472680076, 0.02875584715397023, 0.11512444438172911),
            (0.09910993965985282, 0.004307832160714009, 0.7442385076631638, 0.15234372051626935),
            (0.7442385076631637, 0.09910993965985171, 0.004307832160712194, 0.1523437205162724),
            (0.004307832160711955, 0.7442385076631619, 0.09910993965985494, 0.15234372051627118),
            (0.0036340380398776073, 0.11764534481603783, 0.8589044391845222, 0.01981617795956232),
            (0.8589044391845284, 0.0036340380398754007, 0.11764534481603509, 0.019816177959561095),
            (0.11764534481603972, 0.8589044391845246, 0.0036340380398744514, 0.019816177959561095),
            (0.16939927553294898, 0.003557095377269004, 0.7939888499122254, 0.03305477917755663),
            (0.7939888499122236, 0.16939927553295064, 0.0035570953772685247, 0.03305477917755724),
            (0.00355709537726856, 0.7939888499122266, 0.16939927553294748, 0.03305477917755724),
            (0.03490045658756613, 0.29064176223692306, 0.0021909123983451136, 0.6722668687771657),
            (0.00219091239834035, 0.03490045658756766, 0.290641762236919, 0.672266868777173),
            (0.29064176223692584, 0.0021909123983389067, 0.034900456587567796, 0.6722668687771675),
            (0.23414488407404932, 0.07282912711688538, 0.6925014175880476, 0.0005245712210176249),
            (0.6925014175880517, 0.23414488407404876, 0.07282912711688308, 0.0005245712210164011),
            (0.07282912711688405, 0.6925014175880512, 0.23414488407405026, 0.0005245712210145654),
            (0.11768433971455661, 0.11768433971455886, 0.11768433971455622, 0.6469469808563283),
            (0.005336077019649443, 0.00533607701965165, 0.005336077019643699, 0.9839917689410552),
            (0.3324969599766402, 0.33249695997664946, 0.33249695997663586, 0.00250912007007451),
            (0.30532958433606283, 0.305329584336061, 0.3053295843360564, 0.0840112469918197),
            (0.2482123715562189, 0.24821237155622405, 0.2482123715562289, 0.2553628853313281),
        ],
        [0.0003477168822067474, 0.0003477168822067616, 0.0003477168822065954, 0.0010498461857128853, 0.001049846185712924, 0.001049846185712963, 0.002189908654760487, 0.0021899086547603986, 0.0021899086547603457, 0.0014306258422901274, 0.0014306258422900988, 0.0014306258422900743, 0.0025877797901113875, 0.0025877797901111403, 0.0025877797901108753, 0.0004693930811221402, 0.0004693930811221191, 0.0004693930811221827, 0.001981330865268672, 0.001981330865268743, 0.0019813308652687073, 0.0012296728163222834, 0.0012296728163221826, 0.0012296728163221312, 0.0013011726613118826, 0.001301172661312045, 0.001301172661312031, 0.003251426805132922, 0.00325142680513294, 0.0032514268051327985, 0.002818078481223573, 0.0028180784812232556, 0.0028180784812233965, 0.0014481262251185877, 0.001448126225118708, 0.001448126225118671, 0.000521121787570755, 0.0005211217875707373, 0.0005211217875707443, 0.0012860526386169393, 0.0012860526386169518, 0.0012860526386169412, 0.000525662267089361, 0.0005256622670894919, 0.0005256622670894088, 0.0015201310181193215, 0.0015201310181193037, 0.0015201310181193355, 0.0005271978638527777, 0.0005271978638527847, 0.000527197863852737, 0.0031305630728215845, 0.0031305630728214965, 0.0031305630728215668, 0.0019252967240803351, 0.0019252967240802998, 0.001925296724080353, 0.0008887153590632215, 0.0008887153590632427, 0.0008887153590631332, 0.0005566045279494755, 0.0005566045279495374, 0.0005566045279495303, 0.0019506389267459358, 0.0019506389267458651, 0.001950638926745883, 0.0014030871341772996, 0.0014030871341773473, 0.0014030871341773807, 0.0007008690706483742, 0.0007008690706484042, 0.0007008690706485157, 0.0005369300725478064, 0.0005369300725478648, 0.0005369300725478471, 0.0018566467954330046, 0.0018566467954329517, 0.0018566467954329164, 8.429047994005053e-05, 8.429047994003728e-05, 8.429047994003499e-05, 0.0013859680589182347, 0.0013859680589182154, 0.0013859680589183108, 0.0019099333823615172, 0.0019099333823615525, 0.0019099333823615699, 0.003658706854740731, 0.003658706854740802, 0.0036587068547407663, 0.0006129569463521515, 0.0006129569463521267, 0.0006129569463521496, 0.0013334326706758316, 0.0013334326706758105, 0.0013334326706758264, 0.0013077514257282751, 0.0013077514257283475, 0.0013077514257283421, 0.0020261229364023307, 0.0020261229364022773, 0.0020261229364022595, 0.00047266648548845955, 0.0004726664854884277, 0.0004726664854884277, 0.0002149093453616986, 0.00021490934536166854, 0.0002149093453616615, 0.0003493889694176171, 0.0003493889694176171, 0.0003493889694176206, 0.00036951072813010897, 0.00036951072813002234, 0.00036951072812999757, 0.000435807242934791, 0.00043580724293476624, 0.000435807242934738, 0.0018509975122165654, 3.336665703934048e-05, 0.0008238259069470654, 0.004252858800216382, 0.004917494562999643],
    ),
    13: (
        [
            (0.06114527911823009, 0.013371428943564023, 0.8180261621944124, 0.10745712974379355),
            (0.8180261621943388, 0.06114527911832584, 0.01337142894352585, 0.10745712974380948),
            (0.013371428943557251, 0.818026162194297, 0.06114527911829647, 0.10745712974384927),
            (0.052855440983364144, 0.08291452043304418, 0.4000979296298915, 0.46413210895370016),
            (0.4000979296300078, 0.05285544098335565, 0.08291452043303993, 0.4641321089535967),
            (0.08291452043293868, 0.4000979296301268, 0.05285544098330974, 0.46413210895362483),
            (0.06596911170719255, 0.030670867576084032, 0.48691789291743387, 0.4164421277992895),
            (0.4869178929174426, 0.0659691117071546, 0.030670867576062445, 0.41644212779934037),
            (0.030670867576085614, 0.4869178929175358, 0.06596911170718464, 0.41644212779919393),
            (0.7671835222425428, 0.05182981415365488, 0.16822762570371444, 0.01275903790008783),
            (0.1682276257037404, 0.7671835222425685, 0.05182981415363272, 0.012759037900058426),
            (0.0518298141536343, 0.16822762570376426, 0.7671835222425369, 0.012759037900064545),
            (0.481064137702757, 0.4847746571587826, 0.015830634350898473, 0.01833057078756196),
            (0.0158306343508835, 0.4810641377028127, 0.48477465715874113, 0.01833057078756257),
            (0.48477465715875445, 0.015830634350901485, 0.48106413770279255, 0.018330570787551525),
            (0.40643416171171254, 0.3704425559581763, 0.2124417592665609, 0.010681523063550311),
            (0.21244175926654552, 0.4064341617118275, 0.370442555958057, 0.010681523063569925),
            (0.3704425559580835, 0.21244175926661543, 0.40643416171173113, 0.010681523063569925),
            (0.30908600949137455, 0.2874706358928882, 0.01782606090077848, 0.38561729371495873),
            (0.01782606090077743, 0.30908600949137144, 0.2874706358928807, 0.3856172937149704),
            (0.2874706358928819, 0.017826060900781954, 0.30908600949137005, 0.3856172937149661),
            (0.5009662598449431, 0.00960895234835521, 0.27207744154279867, 0.2173473462639029),
            (0.27207744154271196, 0.5009662598450279, 0.009608952348337745, 0.21734734626392252),
            (0.009608952348347577, 0.2720774415427656, 0.5009662598449669, 0.21734734626391994),
            (0.22147910683366034, 0.07885099695144127, 0.5333277309204185, 0.16634216529447993),
            (0.5333277309204215, 0.2214791068336956, 0.07885099695140295, 0.16634216529447993),
            (0.07885099695144493, 0.533327730920471, 0.2214791068336244, 0.1663421652944597),
            (0.018150246091703015, 0.7800257224727452, 0.16038086409573993, 0.04144316733981186),
            (0.160380864095782, 0.0181502460917099, 0.7800257224727036, 0.04144316733980452),
            (0.7800257224726912, 0.16038086409582128, 0.018150246091711123, 0.041443167339776335),
            (0.21889979701801698, 0.2766687758182949, 0.10243087892296472, 0.4020005482407234),
            (0.10243087892291491, 0.21889979701798687, 0.2766687758183742, 0.402000548240724),
            (0.2766687758184173, 0.10243087892291128, 0.21889979701797319, 0.4020005482406982),
            (0.1590342234659523, 0.017562309236326318, 0.4819714524309399, 0.3414320148667814),
            (0.481971452430931, 0.15903422346592905, 0.01756230923633348, 0.34143201486680647),
            (0.017562309236336726, 0.48197145243090767, 0.15903422346593635, 0.3414320148668193),
            (0.1520983651998934, 0.012272548167279351, 0.6619834174745408, 0.1736456691582865),
            (0.6619834174744788, 0.15209836519994877, 0.012272548167264035, 0.1736456691583085),
            (0.01227254816728296, 0.661983417474465, 0.15209836519989456, 0.1736456691583575),
            (0.18278164175324507, 0.5438135338903999, 0.07731864884330347, 0.19608617551305163),
            (0.07731864884333584, 0.18278164175325468, 0.5438135338903274, 0.1960861755130822),
            (0.5438135338903474, 0.07731864884330845, 0.18278164175317183, 0.19608617551317234),
            (0.06180743725433946, 0.08639757190646435, 0.7796220928970109, 0.07217289794218527),
            (0.7796220928971, 0.06180743725431108, 0.08639757190638211, 0.07217289794220672),
            (0.08639757190643049, 0.7796220928971535, 0.061807437254284066, 0.072172897942132),
            (0.019568963774224457, 0.008913012362467054, 0.9412811493523088, 0.030236874510999715),
            (0.9412811493522703, 0.019568963774239223, 0.00891301236248347, 0.030236874511007057),
            (0.00891301236248676, 0.9412811493522357, 0.01956896377427103, 0.030236874511006446),
            (0.4404329164120713, 0.028904363524835247, 0.17358023584509186, 0.35708248421800165),
            (0.1735802358450893, 0.4404329164120001, 0.02890436352488751, 0.3570824842180231),
            (0.028904363524862142, 0.17358023584506407, 0.44043291641208143, 0.3570824842179924),
            (0.021129659699391512, 0.02270085011178917, 0.09035183340359446, 0.8658176567852248),
            (0.09035183340362163, 0.02112965969939155, 0.022700850111792494, 0.8658176567851943),
            (0.022700850111781024, 0.09035183340349771, 0.02112965969937999, 0.8658176567853413),
            (0.3206072988650035, 0.021488312702070578, 0.44516947923320516, 0.2127349091997207),
            (0.4451694792331492, 0.3206072988650483, 0.02148831270206713, 0.2127349091997354),
            (0.02148831270207463, 0.4451694792331766, 0.32060729886501266, 0.21273490919973614),
            (0.23031700528567456, 0.6174866483249893, 0.08023850116226451, 0.07195784522707163),
            (0.08023850116229614, 0.23031700528572513, 0.617486648324915, 0.07195784522706368),
            (0.6174866483249094, 0.08023850116232743, 0.23031700528563273, 0.07195784522713045),
            (0.1751776752009786, 0.0945288121975531, 0.659637499955212, 0.07065601264625634),
            (0.6596374999552332, 0.17517767520095615, 0.09452881219751569, 0.07065601264629492),
            (0.09452881219754372, 0.6596374999553177, 0.17517767520092078, 0.07065601264621776),
            (0.020724529261207825, 0.6912849146605328, 0.28209386754170307, 0.005896688536556363),
            (0.28209386754171406, 0.0207245292612111, 0.6912849146605239, 0.0058966885365508565),
            (0.6912849146604692, 0.28209386754178517, 0.020724529261208966, 0.00589668853653675),
            (0.3170690280570031, 0.017577541940982155, 0.5845522419355741, 0.08080118806644068),
            (0.5845522419355895, 0.31706902805700454, 0.017577541940973853, 0.08080118806643212),
            (0.01757754194097272, 0.5845522419356186, 0.3170690280569447, 0.08080118806646393),
            (0.31384152134290455, 0.35894300107719346, 0.09663461813536417, 0.2305808594445378),
            (0.09663461813536567, 0.31384152134292653, 0.3589430010771439, 0.23058085944456397),
            (0.35894300107720445, 0.09663461813535842, 0.31384152134290394, 0.2305808594445332),
            (0.33860421626311665, 0.08902566699071168, 0.5471152663511358, 0.02525485039503582),
            (0.547115266351174, 0.3386042162631001, 0.08902566699068697, 0.02525485039503888),
            (0.08902566699065662, 0.5471152663511728, 0.33860421626312065, 0.025254850395049926),
            (0.07902538901809641, 0.3497758718670662, 0.561185464162414, 0.010013274952423446),
            (0.5611854641624485, 0.07902538901814765, 0.34977587186696624, 0.01001327495243752),
            (0.34977587186700765, 0.5611854641624555, 0.0790253890181085, 0.010013274952428342),
            (0.07915594917538327, 0.03361314533023657, 0.8788187468359565, 0.008412158658423645),
            (0.8788187468359483, 0.0791559491753922, 0.03361314533024447, 0.008412158658415079),
            (0.033613145330265826, 0.8788187468359099, 0.07915594917543554, 0.008412158658388734),
            (0.011155065746338177, 0.03145181004767922, 0.8108726651448129, 0.14652045906116978),
            (0.8108726651448428, 0.011155065746349894, 0.031451810047659505, 0.14652045906114775),
            (0.0314518100476503, 0.8108726651448395, 0.011155065746344705, 0.1465204590611655),
            (0.012015910518014428, 0.15619153416266857, 0.7035601418165592, 0.12823241350275766),
            (0.703560141816573, 0.012015910518011957, 0.1561915341626666, 0.12823241350274847),
            (0.1561915341626271, 0.7035601418166272, 0.012015910518001556, 0.12823241350274417),
            (0.200960600674421, 0.23624230586195327, 0.532135976831517, 0.030661116632108694),
            (0.5321359768314984, 0.20096060067448543, 0.2362423058618977, 0.03066111663211848),
            (0.2362423058619051, 0.53213597683155, 0.20096060067440621, 0.030661116632138708),
            (0.39875744314116635, 0.39092960743940386, 0.12274906286695869, 0.08756388655247117),
            (0.12274906286697351, 0.3987574431411713, 0.3909296074393541, 0.08756388655250115),
            (0.3909296074393993, 0.12274906286696835, 0.3987574431411317, 0.08756388655250054),
            (0.009571364698317542, 0.07763792076797843, 0.6068954673005383, 0.30589524723316575),
            (0.6068954673005633, 0.009571364698318381, 0.07763792076798608, 0.30589524723313216),
            (0.0776379207679958, 0.6068954673005268, 0.009571364698299018, 0.30589524723317846),
            (0.2614198078675617, 0.16456913121524241, 0.03545951407500248, 0.5385515468421934),
            (0.03545951407501524, 0.2614198078675273, 0.16456913121522612, 0.5385515468422314),
            (0.16456913121521555, 0.03545951407500558, 0.26141980786757935, 0.5385515468421995),
            (0.07543474921306292, 0.06541766890802342, 0.6384747189831496, 0.2206728628957641),
            (0.638474718983173, 0.07543474921308099, 0.06541766890798661, 0.22067286289575944),
            (0.06541766890804968, 0.6384747189831916, 0.07543474921303873, 0.22067286289571997),
            (0.06566065089490747, 0.10031985363325158, 0.24341356224078814, 0.5906059332310528),
            (0.24341356224076693, 0.06566065089494993, 0.10031985363326523, 0.590605933231018),
            (0.10031985363332052, 0.2434135622409514, 0.06566065089490115, 0.590605933230827),
            (0.00860314526298911, 0.08145578260858205, 0.8844920682247887, 0.02544900390364009),
            (0.884492068224794, 0.008603145262976022, 0.081455782608604, 0.025449003903625984),
            (0.08145578260857833, 0.8844920682248392, 0.008603145262962715, 0.025449003903619868),
            (0.3710934105995328, 0.5054323769913358, 0.026572340845975383, 0.09690187156315595),
            (0.026572340845978037, 0.371093410599567, 0.5054323769913125, 0.09690187156314249),
            (0.5054323769913619, 0.0265723408459749, 0.371093410599533, 0.09690187156313027),
            (0.13062524152767696, 0.11714202839550286, 0.01515715824748942, 0.7370755718293307),
            (0.015157158247480096, 0.13062524152767713, 0.11714202839548701, 0.7370755718293558),
            (0.11714202839548093, 0.015157158247513, 0.13062524152766922, 0.7370755718293368),
            (0.16261799220261608, 0.11084950229959872, 0.40021279496230044, 0.3263197105354847),
            (0.40021279496232065, 0.16261799220260767, 0.11084950229958453, 0.32631971053548714),
            (0.11084950229960322, 0.40021279496230433, 0.16261799220257037, 0.32631971053552206),
            (0.007482222177408238, 0.024774296905981874, 0.4464146999626367, 0.5213287809539732),
            (0.4464146999626373, 0.0074822221773922365, 0.02477429690597835, 0.5213287809539922),
            (0.024774296905962667, 0.4464146999625708, 0.007482222177401387, 0.5213287809540651),
            (0.21083715440543205, 0.20692236263026756, 0.44180558888038896, 0.14043489408391138),
            (0.4418055888804042, 0.21083715440542541, 0.20692236263021296, 0.14043489408395732),
            (0.20692236263025565, 0.44180558888039273, 0.21083715440539189, 0.14043489408395976),
            (0.6955288748491169, 0.0074144609772577585, 0.26884285176817513, 0.02821381240545036),
            (0.26884285176816614, 0.6955288748491351, 0.007414460977235686, 0.02821381240546321),
            (0.0074144609772403, 0.26884285176817624, 0.6955288748491215, 0.028213812405461985),
            (0.022163938027892294, 0.027124911034180563, 0.23590812527504781, 0.7148030256628793),
            (0.23590812527506588, 0.022163938027898893, 0.0271249110341817, 0.7148030256628535),
            (0.027124911034182797, 0.23590812527495872, 0.022163938027905207, 0.7148030256629533),
            (0.07584422591767992, 0.0025941652651872427, 0.34179307423202143, 0.5797685345851114),
            (0.34179307423203176, 0.07584422591768271, 0.002594165265210362, 0.5797685345850752),
            (0.0025941652652177183, 0.34179307423208477, 0.07584422591769567, 0.5797685345850018),
            (0.1676137196659353, 0.12082870476910867, 0.7086431089235702, 0.00291446664138588),
            (0.7086431089235264, 0.1676137196659544, 0.12082870476910877, 0.0029144666414103555),
            (0.12082870476914742, 0.7086431089234962, 0.16761371966599986, 0.0029144666413564754),
            (0.029242566722754937, 0.004238509505517907, 0.6606125044180272, 0.30590641935369994),
            (0.6606125044180046, 0.029242566722753605, 0.004238509505524849, 0.305906419353717),
            (0.004238509505534838, 0.6606125044179558, 0.029242566722754677, 0.30590641935375457),
            (0.0010304379773613537, 0.13745039479674537, 0.3006497694476872, 0.5608693977782061),
            (0.300649769447646, 0.0010304379773770772, 0.13745039479672724, 0.5608693977782496),
            (0.13745039479673493, 0.30064976944771116, 0.0010304379773385167, 0.5608693977782153),
            (0.0951170007288864, 0.09511700072900633, 0.09511700072889277, 0.7146489978132144),
            (0.010345107256599428, 0.010345107256522842, 0.010345107256587067, 0.9689646782302906),
            (0.30955501834310106, 0.3095550183430962, 0.3095550183430514, 0.07133494497075138),
            (0.1668632870415807, 0.16686328704155956, 0.16686328704167094, 0.49941013887518887),
            (0.25055888693956174, 0.2505588869395491, 0.25055888693958245, 0.24832333918130678),
        ],
        [0.00035512259073019743, 0.00035512259072977313, 0.00035512259073010197, 0.0011778743882756913, 0.0011778743882767217, 0.0011778743882738616, 0.0008144758584716206, 0.0008144758584703778, 0.0008144758584702257, 0.00045302378387294576, 0.00045302378387236057, 0.0004530237838724366, 0.0004154352296917149, 0.0004154352296915045, 0.00041543522969170253, 0.0009317064412002207, 0.0009317064412011594, 0.0009317064412010392, 0.0012638850771855303, 0.0012638850771856662, 0.0012638850771857424, 0.0007934548044531542, 0.000793454804452631, 0.0007934548044530057, 0.0019104583647194886, 0.0019104583647188522, 0.0019104583647201426, 0.0005183573574952898, 0.0005183573574954047, 0.0005183573574953269, 0.0025711362520780276, 0.002571136252077285, 0.002571136252077816, 0.0011277704236273562, 0.001127770423627793, 0.001127770423627761, 0.0007731049469581534, 0.0007731049469574427, 0.0007731049469581393, 0.0021274466568828314, 0.002127446656884122, 0.0021274466568832378, 0.000921279112410639, 0.0009212791124102359, 0.0009212791124099637, 0.00010841532703717528, 0.0001084153270373625, 0.00010841532703751805, 0.0015235584390117583, 0.001523558439014583, 0.001523558439013236, 0.00037117374802256845, 0.00037117374802262684, 0.00037117374802226444, 0.0013824952238897677, 0.001382495223889704, 0.0013824952238899355, 0.0015533880894573612, 0.001553388089457734, 0.0015533880894588248, 0.001578561953453238, 0.001578561953453003, 0.0015785619534532255, 0.00023853469157185292, 0.00023853469157180166, 0.00023853469157155948, 0.0009388009003998089, 0.0009388009003994394, 0.0009388009003994995, 0.0029616885554543527, 0.0029616885554541407, 0.002961688555453911, 0.0011558578573169192, 0.0011558578573166221, 0.001155857857316737, 0.0006904621960691763, 0.0006904621960698745, 0.0006904621960693, 0.0002234752579785118, 0.00022347525797840572, 0.0002234752579782148, 0.000348065102024544, 0.0003480651020247596, 0.0003480651020245617, 0.0007517374404998906, 0.0007517374404998534, 0.0007517374404992116, 0.0016802161392982583, 0.0016802161392984614, 0.0016802161392987106, 0.002560116187914948, 0.0025601161879153537, 0.0025601161879153364, 0.000655090858734336, 0.0006550908587344119, 0.000655090858733901, 0.0018087386127984566, 0.0018087386127988634, 0.0018087386127986689, 0.0016097788682897494, 0.001609778868289392, 0.0016097788682897546, 0.0017764529129038397, 0.0017764529129050241, 0.0017764529129061554, 0.00021516249282610756, 0.00021516249282587418, 0.00021516249282564615, 0.0013098601219425695, 0.001309860121942727, 0.0013098601219425094, 0.0008002620463696549, 0.0008002620463692414, 0.0008002620463703904, 0.0033033665682091523, 0.003303366568208127, 0.0033033665682094884, 0.00036914456583345693, 0.000369144565833091, 0.0003691445658331334, 0.003116760995113377, 0.003116760995113907, 0.0031167609951133946, 0.0003560839508039695, 0.0003560839508036743, 0.00035608395080374676, 0.0006619235298199112, 0.0006619235298200491, 0.0006619235298204397, 0.0004021312286914711, 0.0004021312286918883, 0.0004021312286922737, 0.00042669859792525525, 0.000426698597925759, 0.00042669859792465595, 0.0003361316642480876, 0.00033613166424813716, 0.00033613166424835634, 0.0005341727061939642, 0.0005341727061944361, 0.0005341727061933348, 0.0014385650798460585, 4.1343244586146747e-05, 0.0028342804372452303, 0.0023400227806175925, 0.004303940769897275],
    ),
    14: (
        [
            (0.6468660883849773, 0.07162380480079726, 0.21536932251427968, 0.06614078429994583),
            (0.21536932251566943, 0.6468660883848493, 0.07162380480015641, 0.06614078429932486),
            (0.07162380480109709, 0.21536932251507912, 0.6468660883845436, 0.06614078429928016),
            (0.5706340243898889, 0.24032632597437195, 0.08400311873016893, 0.10503653090557019),
            (0.08400311873016686, 0.570634024389719, 0.2403263259718612, 0.10503653090825299),
            (0.24032632597281633, 0.08400311872986543, 0.5706340243899415, 0.10503653090737669),
            (0.020325545061545824, 0.014555376263079955, 0.7220074978408388, 0.24311158083453546),
            (0.7220074978395186, 0.020325545061407633, 0.014555376263444351, 0.24311158083562942),
            (0.014555376263063802, 0.722007497840107, 0.020325545061458672, 0.24311158083537057),
            (0.315770730849263, 0.012529059808040977, 0.5497595632204098, 0.12194064612228624),
            (0.5497595632202685, 0.31577073085006857, 0.01252905980810357, 0.12194064612155936),
            (0.01252905980810981, 0.5497595632185667, 0.3157707308512964, 0.12194064612202721),
            (0.08497804426588462, 0.3845620968650356, 0.5175135257172314, 0.012946333151848373),
            (0.5175135257176702, 0.08497804426566632, 0.3845620968647722, 0.01294633315189124),
            (0.384562096864532, 0.5175135257179317, 0.08497804426593038, 0.012946333151605899),
            (0.1271466762693262, 0.35854452716358104, 0.16775247028179938, 0.3465563262852934),
            (0.16775247028167473, 0.12714667626975823, 0.358544527164529, 0.34655632628403804),
            (0.358544527163863, 0.16775247028324491, 0.12714667626909165, 0.34655632628380045),
            (0.10488667854935807, 0.224732675518662, 0.6533880188663118, 0.016992627065668165),
            (0.653388018866566, 0.10488667854884898, 0.22473267551858683, 0.01699262706599821),
            (0.22473267551765574, 0.6533880188669758, 0.10488667854953983, 0.016992627065828582),
            (0.5115423865329275, 0.08923568468759846, 0.30640477477896055, 0.0928171540005135),
            (0.30640477477866646, 0.5115423865329084, 0.0892356846886177, 0.09281715399980746),
            (0.08923568468826981, 0.30640477477872685, 0.5115423865325865, 0.09281715400041675),
            (0.20684956133003718, 0.007294355381304185, 0.540479768065727, 0.24537631522293174),
            (0.5404797680666593, 0.20684956133010135, 0.007294355381551661, 0.24537631522168765),
            (0.007294355381374462, 0.5404797680654152, 0.20684956133125035, 0.24537631522196005),
            (0.10073440141128676, 0.0973720336353292, 0.3089846928173873, 0.49290887213599677),
            (0.3089846928186335, 0.10073440141218454, 0.09737203363634439, 0.4929088721328375),
            (0.09737203363469049, 0.30898469281773144, 0.10073440141062295, 0.4929088721369551),
            (0.008834986542875178, 0.3990139062271812, 0.009247363617832514, 0.5829037436121111),
            (0.009247363617907123, 0.008834986543019452, 0.3990139062254032, 0.5829037436136701),
            (0.39901390622184096, 0.009247363618204, 0.008834986543086449, 0.5829037436168686),
            (0.016080350012748656, 0.02152082553456075, 0.5832780159922267, 0.3791208084604638),
            (0.5832780159884186, 0.016080350012691667, 0.02152082553450792, 0.3791208084643818),
            (0.02152082553435275, 0.5832780159937188, 0.0160803500131377, 0.3791208084587908),
            (0.017734143862101592, 0.0688331739588598, 0.8989650605385751, 0.014467621640463571),
            (0.8989650605388616, 0.01773414386215457, 0.06883317395833531, 0.014467621640648496),
            (0.06883317395881172, 0.8989650605386637, 0.017734143862307827, 0.014467621640216779),
            (0.33615096361680363, 0.002747623971615709, 0.38464570360739664, 0.27645570880418396),
            (0.3846457036083313, 0.33615096361651403, 0.002747623971355153, 0.2764557088037995),
            (0.002747623971074753, 0.38464570360484696, 0.336150963618088, 0.27645570880599035),
            (0.23367686225129847, 0.5303977839660676, 0.22735638687752838, 0.008568966905105514),
            (0.22735638687766158, 0.2336768622507286, 0.5303977839664743, 0.008568966905135495),
            (0.5303977839674884, 0.22735638687684145, 0.233676862250474, 0.00856896690519614),
            (0.07837424052557895, 0.4730823945786081, 0.3761818136912943, 0.07236155120451858),
            (0.37618181369118364, 0.07837424052573175, 0.4730823945784289, 0.07236155120465575),
            (0.47308239457660317, 0.3761818136931924, 0.07837424052530433, 0.07236155120490008),
            (0.0919904678934359, 0.5522182104345289, 0.35085999644596805, 0.0049313252260671445),
            (0.3508599964456437, 0.09199046789365573, 0.5522182104342733, 0.0049313252264272375),
            (0.5522182104349225, 0.3508599964450816, 0.09199046789304381, 0.0049313252269520295),
            (0.22927780233401251, 0.6612982036782237, 0.013411164646971115, 0.0960128293407927),
            (0.013411164647151752, 0.22927780233386763, 0.6612982036783233, 0.09601282934065736),
            (0.6612982036775086, 0.013411164647075563, 0.22927780233499734, 0.09601282934041852),
            (0.019046133856295056, 0.022289636444338456, 0.834383890577588, 0.12428033912177855),
            (0.8343838905784318, 0.01904613385629668, 0.02228963644438772, 0.12428033912088388),
            (0.022289636444384975, 0.8343838905759401, 0.01904613385630601, 0.12428033912336887),
            (0.30063148274543217, 0.0076675079395351065, 0.26125966949594825, 0.43044133981908456),
            (0.26125966949604584, 0.3006314827445464, 0.007667507939682754, 0.4304413398197251),
            (0.007667507939729368, 0.2612596694952174, 0.3006314827447684, 0.43044133982028476),
            (0.507177780766412, 0.21600654434562203, 0.06230404677908081, 0.21451162810888513),
            (0.062304046778775546, 0.5071777807646766, 0.2160065443462192, 0.21451162811032867),
            (0.21600654434609612, 0.062304046778809186, 0.5071777807651789, 0.2145116281099157),
            (0.017241394057909032, 0.3942991568981551, 0.47392585491525724, 0.11453359412867864),
            (0.4739258549134614, 0.017241394057918524, 0.394299156900111, 0.11453359412850901),
            (0.39429915689852635, 0.4739258549146193, 0.017241394057938692, 0.11453359412891563),
            (0.019565349407891564, 0.018830992564021334, 0.07968733056157803, 0.881916327466509),
            (0.07968733055980937, 0.019565349407685992, 0.018830992563699054, 0.8819163274688055),
            (0.01883099256404297, 0.07968733056254265, 0.019565349407989107, 0.8819163274654253),
            (0.8058111958213061, 0.019749951346152123, 0.09857704079958501, 0.07586181203295674),
            (0.09857704079892249, 0.8058111958226276, 0.01974995134613918, 0.07586181203231065),
            (0.01974995134620261, 0.09857704079908963, 0.8058111958219788, 0.0758618120327289),
            (0.19933085565346487, 0.01952291262766581, 0.7709900229262809, 0.010156208792588337),
            (0.7709900229259746, 0.19933085565366757, 0.019522912627698483, 0.01015620879265935),
            (0.019522912627651823, 0.7709900229262198, 0.19933085565342365, 0.010156208792704697),
            (0.15485227312070338, 0.1783434906135457, 0.4526488719953614, 0.2141553642703895),
            (0.4526488719953866, 0.15485227311971955, 0.17834349061310426, 0.2141553642717896),
            (0.17834349061364052, 0.4526488719948077, 0.15485227312058691, 0.2141553642709648),
            (0.3968682475409592, 0.04604965750936916, 0.04075932674082387, 0.5163227682088478),
            (0.0407593267401295, 0.3968682475417654, 0.04604965750902214, 0.516322768209083),
            (0.04604965750898238, 0.04075932674062077, 0.3968682475411296, 0.5163227682092673),
            (0.5341109683663615, 0.05411126130896658, 0.20566325305419966, 0.20611451727047223),
            (0.20566325305519872, 0.5341109683657476, 0.05411126130928795, 0.20611451726976576),
            (0.05411126130900201, 0.20566325305406286, 0.5341109683662315, 0.20611451727070368),
            (0.09983516167438167, 0.6502100979139477, 0.22353314623667855, 0.026421594174992107),
            (0.22353314623552334, 0.09983516167429846, 0.6502100979152712, 0.026421594174906988),
            (0.6502100979152228, 0.22353314623542364, 0.0998351616745544, 0.02642159417479923),
            (0.1932367143315945, 0.07714531472977043, 0.071365091252099, 0.6582528796865361),
            (0.0713650912516075, 0.19323671432825346, 0.0771453147294131, 0.6582528796907259),
            (0.07714531472964348, 0.0713650912511827, 0.19323671432918338, 0.6582528796899905),
            (0.19900336993157897, 0.01940675068596598, 0.7061532545902, 0.07543662479225506),
            (0.7061532545905937, 0.1990033699311778, 0.019406750685986785, 0.0754366247922416),
            (0.019406750686001173, 0.7061532545897243, 0.19900336993159876, 0.07543662479267577),
            (0.09882631223921035, 0.09409500064304088, 0.787767898624377, 0.019310788493371707),
            (0.7877678986243277, 0.09882631223940275, 0.09409500064289476, 0.019310788493374767),
            (0.09409500064276233, 0.7877678986241532, 0.09882631223971029, 0.019310788493374153),
            (0.02012121561802238, 0.20392319120066615, 0.7615550557609512, 0.01440053742036031),
            (0.7615550557614315, 0.020121215618030527, 0.20392319120023583, 0.014400537420302149),
            (0.20392319120057778, 0.7615550557610797, 0.020121215618045276, 0.014400537420297253),
            (0.3621240555074201, 0.04637577761701103, 0.35026145151799376, 0.24123871535757513),
            (0.3502614515184732, 0.3621240555066351, 0.04637577761704328, 0.24123871535784844),
            (0.046375777616639136, 0.3502614515181502, 0.36212405550780125, 0.24123871535740932),
            (0.4143211516032852, 0.038305467110045135, 0.1610045656134992, 0.38636881567317044),
            (0.16100456561337895, 0.4143211516037891, 0.03830546710979192, 0.38636881567304004),
            (0.03830546711009197, 0.16100456561387297, 0.41432115160271393, 0.3863688156733211),
            (0.25382258864138585, 0.2851510675157583, 0.09704125425919999, 0.3639850895836558),
            (0.09704125425957444, 0.25382258864258966, 0.28515106751538394, 0.36398508958245185),
            (0.28515106751490604, 0.09704125425935214, 0.2538225886423786, 0.3639850895833631),
            (0.6954803384809597, 0.10144050962237772, 0.018774198747379966, 0.18430495314928264),
            (0.018774198747520843, 0.6954803384805679, 0.10144050962235553, 0.18430495314955575),
            (0.10144050962254869, 0.0187741987475053, 0.6954803384805777, 0.18430495314936837),
            (0.09578855271960773, 0.6756949276687967, 0.018232037716882164, 0.21028448189471335),
            (0.0182320377168399, 0.09578855271908893, 0.6756949276694416, 0.21028448189462956),
            (0.6756949276690382, 0.018232037716781176, 0.09578855271960039, 0.21028448189458027),
            (0.09761999738538973, 0.29354885057775276, 0.00820980056996951, 0.600621351466888),
            (0.00820980056988374, 0.09761999738538321, 0.29354885057703367, 0.6006213514676993),
            (0.2935488505780828, 0.008209800569967791, 0.09761999738502113, 0.6006213514669283),
            (0.2096968537720405, 0.5035445472625715, 0.20767708028302503, 0.079081518682363),
            (0.20767708028338527, 0.20969685377178654, 0.5035445472625852, 0.07908151868224297),
            (0.5035445472625298, 0.20767708028259285, 0.20969685377192274, 0.07908151868295456),
            (0.016798893959737438, 0.38230094649186747, 0.5783447354271681, 0.022555424121226856),
            (0.5783447354274185, 0.016798893959684563, 0.38230094649173063, 0.02255542412116621),
            (0.3823009464917516, 0.5783447354272748, 0.016798893959706896, 0.02255542412126666),
            (0.07638832520538574, 0.01932237274817633, 0.8479054475994247, 0.05638385444701337),
            (0.8479054475991824, 0.07638832520527937, 0.01932237274818319, 0.05638385444735507),
            (0.019322372748106775, 0.8479054476003128, 0.07638832520496071, 0.05638385444661962),
            (0.010302352617452493, 0.11145515833851247, 0.11548607976972973, 0.7627564092743053),
            (0.11548607977012937, 0.010302352616825293, 0.1114551583386972, 0.7627564092743482),
            (0.11145515833883868, 0.11548607977007065, 0.010302352617070111, 0.7627564092740206),
            (0.38996760915758366, 0.17754788331360974, 0.029460356729192647, 0.4030241507996139),
            (0.029460356729165804, 0.38996760915640377, 0.17754788331433516, 0.40302415080009524),
            (0.1775478833137354, 0.0294603567291844, 0.3899676091567566, 0.40302415080032367),
            (0.20340040949173854, 0.038222189528828665, 0.19552219375788615, 0.5628552072215466),
            (0.1955221937579339, 0.20340040949150356, 0.038222189529104694, 0.5628552072214579),
            (0.03822218952924927, 0.1955221937576973, 0.20340040949159996, 0.5628552072214534),
            (0.379275631522044, 0.017482878960967896, 0.5801957624013359, 0.02304572711565228),
            (0.5801957624012272, 0.3792756315222442, 0.017482878960898385, 0.023045727115630254),
            (0.017482878960941695, 0.5801957624014107, 0.37927563152201493, 0.023045727115632703),
            (0.5056921914393826, 0.004110131411248538, 0.09120718428587574, 0.3989904928634932),
            (0.09120718428427832, 0.5056921914391684, 0.004110131411517338, 0.39899049286503585),
            (0.004110131411617868, 0.09120718428557456, 0.5056921914383364, 0.3989904928644712),
            (0.009252353846642691, 0.9526591910584254, 0.004788844764298216, 0.033299610330633674),
            (0.004788844764304967, 0.009252353846426642, 0.9526591910590272, 0.03329961033024115),
            (0.9526591910599619, 0.0047888447639309285, 0.009252353846064461, 0.03329961033004273),
            (0.19141817810091577, 0.39199335018389064, 0.38598018918754795, 0.030608282527645598),
            (0.3859801891881357, 0.19141817810078365, 0.39199335018335724, 0.030608282527723376),
            (0.3919933501844456, 0.3859801891869218, 0.19141817810099193, 0.030608282527640706),
            (0.08050368241722117, 0.06794709903263552, 0.547935626185202, 0.3036135923649413),
            (0.5479356261858792, 0.08050368241686029, 0.06794709903225483, 0.3036135923650056),
            (0.06794709903303553, 0.5479356261849524, 0.0805036824174767, 0.3036135923645354),
            (0.3494651707571763, 0.3322960833854868, 0.15380603608032287, 0.16443270977701402),
            (0.15380603608023025, 0.3494651707568162, 0.332296083385749, 0.16443270977720445),
            (0.33229608338596295, 0.15380603608034293, 0.34946517075658035, 0.1644327097771138),
            (0.10206343496182313, 0.10151715917024423, 0.6801469177635079, 0.11627248810442473),
            (0.680146917763628, 0.10206343496184403, 0.10151715916997768, 0.11627248810455026),
            (0.10151715917041115, 0.6801469177636641, 0.10206343496165496, 0.11627248810426981),
            (0.28742247583021596, 0.10403477450915696, 0.005601417694883152, 0.602941331965744),
            (0.005601417694706123, 0.287422475829685, 0.10403477450946141, 0.6029413319661475),
            (0.10403477450903631, 0.005601417694663685, 0.28742247583037533, 0.6029413319659247),
            (0.02128074763840948, 0.2129425371459556, 0.022069294158669372, 0.7437074210569655),
            (0.022069294158707065, 0.02128074763837068, 0.21294253714467626, 0.7437074210582459),
            (0.2129425371424063, 0.022069294158889398, 0.021280747638562404, 0.7437074210601419),
            (0.06141444425257925, 0.013275531940829144, 0.9232999651574756, 0.002010058649116087),
            (0.9232999651566972, 0.06141444425278526, 0.01327553194070759, 0.0020100586498098946),
            (0.013275531940570628, 0.9232999651585444, 0.06141444425249767, 0.002010058648387369),
            (0.5264551637851768, 0.08400887661431676, 0.003239809329569605, 0.3862961502709369),
            (0.0032398093301884145, 0.5264551637842714, 0.08400887661498041, 0.3862961502705597),
            (0.08400887661399548, 0.0032398093299368935, 0.5264551637848467, 0.386296150271221),
            (0.001924145578005687, 0.23494061248840276, 0.51564396354686, 0.24749127838673157),
            (0.5156439635459269, 0.001924145578256875, 0.23494061248997608, 0.2474912783858402),
            (0.23494061248890175, 0.5156439635453919, 0.0019241455782302715, 0.2474912783874761),
            (0.3029181193289797, 0.3029181193293764, 0.3029181193293014, 0.09124564201234257),
            (0.0068577036797383695, 0.006857703681460751, 0.006857703680960095, 0.9794268889578408),
            (0.1658875202546949, 0.16588752025504502, 0.16588752025509207, 0.502337439235168),
            (0.07781592317112174, 0.07781592316817373, 0.07781592316882598, 0.7665522304918786),
            (0.33172395261502174, 0.3317239526139897, 0.33172395261500154, 0.004828142155987079),
            (0.2432210319421061, 0.2432210319416701, 0.2432210319415151, 0.2703369041747087),
        ],
        [0.0007200311129131555, 0.0007200311129157382, 0.0007200311129206578, 0.0011166085861902017, 0.0011166085861889572, 0.0011166085861845378, 0.00025950618726125935, 0.0002595061872718607, 0.0002595061872553373, 0.0006139296700493466, 0.0006139296700527106, 0.00061392967005407, 0.0005790788253774548, 0.0005790788253779833, 0.0005790788253746122, 0.0018482705192122322, 0.0018482705192153256, 0.0018482705191982666, 0.0006452115628213601, 0.0006452115628287016, 0.0006452115628249434, 0.0014250918814431512, 0.0014250918814340456, 0.0014250918814463262, 0.0005051196200614483, 0.000505119620066688, 0.0005051196200669974, 0.0015179779352933332, 0.001517977935285032, 0.0015179779352944808, 0.00016751105250402328, 0.00016751105250589692, 0.00016751105250894987, 0.00034411881507889335, 0.0003441188150776559, 0.00034411881507963934, 0.00016642515597055306, 0.00016642515597261465, 0.00016642515596955533, 0.00033555287854752024, 0.00033555287854544313, 0.0003355528785383526, 0.0006336953465482812, 0.0006336953465478905, 0.0006336953465503017, 0.0013681663199158508, 0.0013681663199072206, 0.0013681663198938986, 0.0003397225317885449, 0.00033972253179834894, 0.0003397225318067246, 0.0006348790199076736, 0.000634879019912238, 0.0006348790199103518, 0.00028962346741146975, 0.0002896234674121238, 0.00028962346741429816, 0.0006583108630969205, 0.0006583108631030263, 0.0006583108630977937, 0.0017443832390316308, 0.0017443832390199845, 0.001744383239027185, 0.0009040682164432669, 0.0009040682164456145, 0.0009040682164484995, 0.00026235085677843916, 0.00026235085677183654, 0.0002623508567806206, 0.0005119272825811386, 0.0005119272825807409, 0.0005119272825804475, 0.00025173054908368795, 0.00025173054908493424, 0.00025173054908524177, 0.002507865702378711, 0.002507865702379471, 0.0025078657023869487, 0.0009545436306312905, 0.0009545436306200299, 0.0009545436306268906, 0.0016739002367449076, 0.0016739002367584187, 0.0016739002367579486, 0.0009101648818818196, 0.0009101648818741404, 0.0009101648818636469, 0.0012249169070411463, 0.0012249169070348831, 0.0012249169070348443, 0.0006802125901023807, 0.0006802125901020555, 0.0006802125901092856, 0.000604003424044969, 0.0006040034240459378, 0.0006040034240458404, 0.0003279326891011034, 0.00032793268910043694, 0.0003279326891004582, 0.001912790232674277, 0.0019127902326829037, 0.0019127902326753555, 0.0016030264549262445, 0.0016030264549198384, 0.0016030264549219807, 0.0024502975742323966, 0.002450297574239344, 0.002450297574246291, 0.0008076554699327817, 0.0008076554699433264, 0.0008076554699409859, 0.0008218351357671574, 0.0008218351357606448, 0.0008218351357600969, 0.0005773932407945842, 0.0005773932407917504, 0.000577393240793467, 0.002204929040197592, 0.0022049290401969556, 0.002204929040208499, 0.00047251374410969805, 0.0004725137441075379, 0.0004725137441096786, 0.0004368238490340619, 0.0004368238490302576, 0.00043682384903561924, 0.0005239737595797435, 0.0005239737595642084, 0.0005239737595713324, 0.0015217698554902863, 0.0015217698554851138, 0.001521769855489261, 0.0015499925409598893, 0.0015499925409594084, 0.0015499925409610807, 0.0005134274075996242, 0.0005134274075967693, 0.0005134274075983002, 0.00037954037806018655, 0.00037954037806408437, 0.0003795403780687036, 5.1040378635430314e-05, 5.104037863420366e-05, 5.104037863193473e-05, 0.0015744566170082226, 0.0015744566170081875, 0.0015744566170109683, 0.0016792656914285022, 0.001679265691424394, 0.0016792656914316028, 0.002983445658017804, 0.002983445658019236, 0.002983445658019342, 0.0016764283713183738, 0.001676428371318321, 0.00167642837131997, 0.0005158371649003295, 0.0005158371648967781, 0.0005158371648936209, 0.00047807585051956597, 0.00047807585051857604, 0.00047807585052433185, 6.44253894862882e-05, 6.442538948864303e-05, 6.44253894828939e-05, 0.00037611053899940975, 0.0003761105390126715, 0.0003761105390067088, 0.0004344437592961111, 0.00043444375930333414, 0.0004344437593049375, 0.0024815884502454003, 2.210507859257201e-05, 0.0027032117308417674, 0.0007932872325677067, 0.0004793254756053182, 0.0031781597181588517],
    ),
}

# fmt: on
