// Fully symmetric rules on the triangle (0,0), (1,0), (0,1) with positive weights
// and strictly interior nodes. Converted from the Witherden-Vincent tables:
// xi = (x + 1) / 2, eta = (y + 1) / 2, w = w_ref / 4.

/// `(strength, [[xi, eta, weight]])`, sorted by strength.
pub(super) static TRI_RULES: &[(usize, &[[f64; 3]])] = &[
    (1, &[
        [0.3333333333333333, 0.3333333333333333, 0.5],
    ]),
    (2, &[
        [0.16666666666666666, 0.6666666666666666, 0.16666666666666666],
        [0.6666666666666666, 0.16666666666666666, 0.16666666666666666],
        [0.16666666666666666, 0.16666666666666666, 0.16666666666666666],
    ]),
    (4, &[
        [0.4459484909159649, 0.10810301816807023, 0.11169079483900574],
        [0.10810301816807023, 0.4459484909159649, 0.11169079483900574],
        [0.4459484909159649, 0.4459484909159649, 0.11169079483900574],
        [0.09157621350977074, 0.8168475729804585, 0.054975871827660935],
        [0.8168475729804585, 0.09157621350977074, 0.054975871827660935],
        [0.09157621350977074, 0.09157621350977074, 0.054975871827660935],
    ]),
    (6, &[
        [0.06308901449150223, 0.8738219710169955, 0.02542245318510341],
        [0.8738219710169955, 0.06308901449150223, 0.02542245318510341],
        [0.06308901449150223, 0.06308901449150223, 0.02542245318510341],
        [0.24928674517091043, 0.5014265096581791, 0.058393137863189684],
        [0.5014265096581791, 0.24928674517091043, 0.058393137863189684],
        [0.24928674517091043, 0.24928674517091043, 0.058393137863189684],
        [0.053145049844816945, 0.6365024991213987, 0.041425537809186785],
        [0.6365024991213987, 0.053145049844816945, 0.041425537809186785],
        [0.3103524510337844, 0.6365024991213987, 0.041425537809186785],
        [0.6365024991213987, 0.3103524510337844, 0.041425537809186785],
        [0.3103524510337844, 0.053145049844816945, 0.041425537809186785],
        [0.053145049844816945, 0.3103524510337844, 0.041425537809186785],
    ]),
    (8, &[
        [0.3333333333333333, 0.3333333333333333, 0.07215780383889359],
        [0.4592925882927232, 0.0814148234145537, 0.04754581713364231],
        [0.0814148234145537, 0.4592925882927232, 0.04754581713364231],
        [0.4592925882927232, 0.4592925882927232, 0.04754581713364231],
        [0.1705693077517602, 0.6588613844964796, 0.05160868526735912],
        [0.6588613844964796, 0.1705693077517602, 0.05160868526735912],
        [0.1705693077517602, 0.1705693077517602, 0.05160868526735912],
        [0.05054722831703098, 0.8989055433659381, 0.01622924881159904],
        [0.8989055433659381, 0.05054722831703098, 0.01622924881159904],
        [0.05054722831703098, 0.05054722831703098, 0.01622924881159904],
        [0.008394777409957605, 0.7284923929554042, 0.013615157087217496],
        [0.7284923929554042, 0.008394777409957605, 0.013615157087217496],
        [0.2631128296346381, 0.7284923929554042, 0.013615157087217496],
        [0.7284923929554042, 0.2631128296346381, 0.013615157087217496],
        [0.2631128296346381, 0.008394777409957605, 0.013615157087217496],
        [0.008394777409957605, 0.2631128296346381, 0.013615157087217496],
    ]),
    (10, &[
        [0.3333333333333333, 0.3333333333333333, 0.040871664573142986],
        [0.03205537321694351, 0.935889253566113, 0.006676484406574783],
        [0.935889253566113, 0.03205537321694351, 0.006676484406574783],
        [0.03205537321694351, 0.03205537321694351, 0.006676484406574783],
        [0.14216110105656438, 0.7156777978868712, 0.022978981802372365],
        [0.7156777978868712, 0.14216110105656438, 0.022978981802372365],
        [0.14216110105656438, 0.14216110105656438, 0.022978981802372365],
        [0.32181299528883545, 0.530054118927344, 0.03195245319821202],
        [0.530054118927344, 0.32181299528883545, 0.03195245319821202],
        [0.14813288578382056, 0.530054118927344, 0.03195245319821202],
        [0.530054118927344, 0.14813288578382056, 0.03195245319821202],
        [0.14813288578382056, 0.32181299528883545, 0.03195245319821202],
        [0.32181299528883545, 0.14813288578382056, 0.03195245319821202],
        [0.02961988948872977, 0.6012333286834592, 0.017092324081479714],
        [0.6012333286834592, 0.02961988948872977, 0.017092324081479714],
        [0.36914678182781097, 0.6012333286834592, 0.017092324081479714],
        [0.6012333286834592, 0.36914678182781097, 0.017092324081479714],
        [0.36914678182781097, 0.02961988948872977, 0.017092324081479714],
        [0.02961988948872977, 0.36914678182781097, 0.017092324081479714],
        [0.02836766533993844, 0.807930600922879, 0.012648878853644192],
        [0.807930600922879, 0.02836766533993844, 0.012648878853644192],
        [0.1637017337371825, 0.807930600922879, 0.012648878853644192],
        [0.807930600922879, 0.1637017337371825, 0.012648878853644192],
        [0.1637017337371825, 0.02836766533993844, 0.012648878853644192],
        [0.02836766533993844, 0.1637017337371825, 0.012648878853644192],
    ]),
    (12, &[
        [0.4882037509455415, 0.023592498108916896, 0.012133419040726016],
        [0.023592498108916896, 0.4882037509455415, 0.012133419040726016],
        [0.4882037509455415, 0.4882037509455415, 0.012133419040726016],
        [0.1092578276593543, 0.7814843446812915, 0.014243026034438772],
        [0.7814843446812915, 0.1092578276593543, 0.014243026034438772],
        [0.1092578276593543, 0.1092578276593543, 0.014243026034438772],
        [0.2714625070149261, 0.45707498597014784, 0.03127060659795138],
        [0.45707498597014784, 0.2714625070149261, 0.03127060659795138],
        [0.2714625070149261, 0.2714625070149261, 0.03127060659795138],
        [0.024646363436335594, 0.9507072731273288, 0.0039658212549868194],
        [0.9507072731273288, 0.024646363436335594, 0.0039658212549868194],
        [0.024646363436335594, 0.024646363436335594, 0.0039658212549868194],
        [0.4401116486585931, 0.11977670268281378, 0.02495916746403047],
        [0.11977670268281378, 0.4401116486585931, 0.02495916746403047],
        [0.4401116486585931, 0.4401116486585931, 0.02495916746403047],
        [0.29165567973834094, 0.6853101639063919, 0.01089179251930378],
        [0.6853101639063919, 0.29165567973834094, 0.01089179251930378],
        [0.02303415635526714, 0.6853101639063919, 0.01089179251930378],
        [0.6853101639063919, 0.02303415635526714, 0.01089179251930378],
        [0.02303415635526714, 0.29165567973834094, 0.01089179251930378],
        [0.29165567973834094, 0.02303415635526714, 0.01089179251930378],
        [0.11629601967792659, 0.628249751683556, 0.021613681829707104],
        [0.628249751683556, 0.11629601967792659, 0.021613681829707104],
        [0.25545422863851736, 0.628249751683556, 0.021613681829707104],
        [0.628249751683556, 0.25545422863851736, 0.021613681829707104],
        [0.25545422863851736, 0.11629601967792659, 0.021613681829707104],
        [0.11629601967792659, 0.25545422863851736, 0.021613681829707104],
        [0.85133779251024, 0.12727971723358936, 0.007541838788255719],
        [0.12727971723358936, 0.85133779251024, 0.007541838788255719],
        [0.02138249025617059, 0.12727971723358936, 0.007541838788255719],
        [0.12727971723358936, 0.02138249025617059, 0.007541838788255719],
        [0.02138249025617059, 0.85133779251024, 0.007541838788255719],
        [0.85133779251024, 0.02138249025617059, 0.007541838788255719],
    ]),
    (14, &[
        [0.17720553241254344, 0.6455889351749131, 0.021081294368496508],
        [0.6455889351749131, 0.17720553241254344, 0.021081294368496508],
        [0.17720553241254344, 0.17720553241254344, 0.021081294368496508],
        [0.41764471934045394, 0.16471056131909215, 0.016394176772062674],
        [0.16471056131909215, 0.41764471934045394, 0.016394176772062674],
        [0.41764471934045394, 0.41764471934045394, 0.016394176772062674],
        [0.0617998830908726, 0.8764002338182548, 0.007216849834888334],
        [0.8764002338182548, 0.0617998830908726, 0.007216849834888334],
        [0.0617998830908726, 0.0617998830908726, 0.007216849834888334],
        [0.4889639103621786, 0.02207217927564272, 0.010941790684714445],
        [0.02207217927564272, 0.4889639103621786, 0.010941790684714445],
        [0.4889639103621786, 0.4889639103621786, 0.010941790684714445],
        [0.27347752830883865, 0.4530449433823227, 0.025887052253645793],
        [0.4530449433823227, 0.27347752830883865, 0.025887052253645793],
        [0.27347752830883865, 0.27347752830883865, 0.025887052253645793],
        [0.019390961248701048, 0.9612180775025979, 0.002461701801200041],
        [0.9612180775025979, 0.019390961248701048, 0.002461701801200041],
        [0.019390961248701048, 0.019390961248701048, 0.002461701801200041],
        [0.29837288213625773, 0.6869801678080878, 0.00721815405676692],
        [0.6869801678080878, 0.29837288213625773, 0.00721815405676692],
        [0.01464695005565441, 0.6869801678080878, 0.00721815405676692],
        [0.6869801678080878, 0.01464695005565441, 0.00721815405676692],
        [0.01464695005565441, 0.29837288213625773, 0.00721815405676692],
        [0.29837288213625773, 0.01464695005565441, 0.00721815405676692],
        [0.05712475740364794, 0.7706085547749965, 0.012332876606281837],
        [0.7706085547749965, 0.05712475740364794, 0.012332876606281837],
        [0.17226668782135557, 0.7706085547749965, 0.012332876606281837],
        [0.7706085547749965, 0.17226668782135557, 0.012332876606281837],
        [0.17226668782135557, 0.05712475740364794, 0.012332876606281837],
        [0.05712475740364794, 0.17226668782135557, 0.012332876606281837],
        [0.336861459796345, 0.5702222908466832, 0.019285755393530342],
        [0.5702222908466832, 0.336861459796345, 0.019285755393530342],
        [0.09291624935697182, 0.5702222908466832, 0.019285755393530342],
        [0.5702222908466832, 0.09291624935697182, 0.019285755393530342],
        [0.09291624935697182, 0.336861459796345, 0.019285755393530342],
        [0.336861459796345, 0.09291624935697182, 0.019285755393530342],
        [0.001268330932872025, 0.8797571713701712, 0.002505114419250336],
        [0.8797571713701712, 0.001268330932872025, 0.002505114419250336],
        [0.11897449769695685, 0.8797571713701712, 0.002505114419250336],
        [0.8797571713701712, 0.11897449769695685, 0.002505114419250336],
        [0.11897449769695685, 0.001268330932872025, 0.002505114419250336],
        [0.001268330932872025, 0.11897449769695685, 0.002505114419250336],
    ]),
    (17, &[
        [0.4171034443615992, 0.1657931112768016, 0.013655463264051053],
        [0.1657931112768016, 0.4171034443615992, 0.013655463264051053],
        [0.4171034443615992, 0.4171034443615992, 0.013655463264051053],
        [0.014755491660753954, 0.9704890166784921, 0.001386943788818821],
        [0.9704890166784921, 0.014755491660753954, 0.001386943788818821],
        [0.014755491660753954, 0.014755491660753954, 0.001386943788818821],
        [0.4655978716188903, 0.06880425676221939, 0.012509725475248678],
        [0.06880425676221939, 0.4655978716188903, 0.012509725475248678],
        [0.4655978716188903, 0.4655978716188903, 0.012509725475248678],
        [0.18035811626637063, 0.6392837674672588, 0.013156315294008993],
        [0.6392837674672588, 0.18035811626637063, 0.013156315294008993],
        [0.18035811626637063, 0.18035811626637063, 0.013156315294008993],
        [0.06665406347959693, 0.8666918730408062, 0.006229500401152721],
        [0.8666918730408062, 0.06665406347959693, 0.006229500401152721],
        [0.06665406347959693, 0.06665406347959693, 0.006229500401152721],
        [0.28570650243658663, 0.42858699512682674, 0.01885811857639764],
        [0.42858699512682674, 0.28570650243658663, 0.01885811857639764],
        [0.28570650243658663, 0.28570650243658663, 0.01885811857639764],
        [0.0160176423621193, 0.824790070165088, 0.003989150102964797],
        [0.824790070165088, 0.0160176423621193, 0.003989150102964797],
        [0.15919228747279268, 0.824790070165088, 0.003989150102964797],
        [0.824790070165088, 0.15919228747279268, 0.003989150102964797],
        [0.15919228747279268, 0.0160176423621193, 0.003989150102964797],
        [0.0160176423621193, 0.15919228747279268, 0.003989150102964797],
        [0.3062815917461865, 0.6263690303864523, 0.011243886273345534],
        [0.6263690303864523, 0.3062815917461865, 0.011243886273345534],
        [0.0673493778673612, 0.6263690303864523, 0.011243886273345534],
        [0.6263690303864523, 0.0673493778673612, 0.011243886273345534],
        [0.0673493778673612, 0.3062815917461865, 0.011243886273345534],
        [0.3062815917461865, 0.0673493778673612, 0.011243886273345534],
        [0.013229672760086894, 0.5712948679446841, 0.005199219977919768],
        [0.5712948679446841, 0.013229672760086894, 0.005199219977919768],
        [0.41547545929522905, 0.5712948679446841, 0.005199219977919768],
        [0.5712948679446841, 0.41547545929522905, 0.005199219977919768],
        [0.41547545929522905, 0.013229672760086894, 0.005199219977919768],
        [0.013229672760086894, 0.41547545929522905, 0.005199219977919768],
        [0.07804234056828242, 0.7532351459364581, 0.01027894916022726],
        [0.7532351459364581, 0.07804234056828242, 0.01027894916022726],
        [0.16872251349525946, 0.7532351459364581, 0.01027894916022726],
        [0.7532351459364581, 0.16872251349525946, 0.01027894916022726],
        [0.16872251349525946, 0.07804234056828242, 0.01027894916022726],
        [0.07804234056828242, 0.16872251349525946, 0.01027894916022726],
        [0.013135870834002694, 0.7150722591106424, 0.004346107250500596],
        [0.7150722591106424, 0.013135870834002694, 0.004346107250500596],
        [0.2717918700553548, 0.7150722591106424, 0.004346107250500596],
        [0.7150722591106424, 0.2717918700553548, 0.004346107250500596],
        [0.2717918700553548, 0.013135870834002694, 0.004346107250500596],
        [0.013135870834002694, 0.2717918700553548, 0.004346107250500596],
        [0.011575175903180615, 0.9159193532978169, 0.0022921742008679335],
        [0.9159193532978169, 0.011575175903180615, 0.0022921742008679335],
        [0.07250547079900242, 0.9159193532978169, 0.0022921742008679335],
        [0.9159193532978169, 0.07250547079900242, 0.0022921742008679335],
        [0.07250547079900242, 0.011575175903180615, 0.0022921742008679335],
        [0.011575175903180615, 0.07250547079900242, 0.0022921742008679335],
        [0.1575054779268699, 0.5432755795961598, 0.013085812967668494],
        [0.5432755795961598, 0.1575054779268699, 0.013085812967668494],
        [0.29921894247697034, 0.5432755795961598, 0.013085812967668494],
        [0.5432755795961598, 0.29921894247697034, 0.013085812967668494],
        [0.29921894247697034, 0.1575054779268699, 0.013085812967668494],
        [0.1575054779268699, 0.29921894247697034, 0.013085812967668494],
    ]),
    (18, &[
        [0.3333333333333333, 0.3333333333333333, 0.018177867650713334],
        [0.39995562806757623, 0.20008874386484754, 0.016652235016695067],
        [0.20008874386484754, 0.39995562806757623, 0.016652235016695067],
        [0.39995562806757623, 0.39995562806757623, 0.016652235016695067],
        [0.48758030157486953, 0.024839396850260875, 0.0060233238169998555],
        [0.024839396850260875, 0.48758030157486953, 0.0060233238169998555],
        [0.48758030157486953, 0.48758030157486953, 0.0060233238169998555],
        [0.46180950640644924, 0.07638098718710154, 0.009474585753389433],
        [0.07638098718710154, 0.46180950640644924, 0.009474585753389433],
        [0.46180950640644924, 0.46180950640644924, 0.009474585753389433],
        [0.24226470251427196, 0.5154705949714561, 0.01823754470447182],
        [0.5154705949714561, 0.24226470251427196, 0.01823754470447182],
        [0.24226470251427196, 0.24226470251427196, 0.01823754470447182],
        [0.038830256088685594, 0.9223394878226288, 0.0035646630098594852],
        [0.9223394878226288, 0.038830256088685594, 0.0035646630098594852],
        [0.038830256088685594, 0.038830256088685594, 0.0035646630098594852],
        [0.0919477421216432, 0.8161045157567136, 0.008279579976001624],
        [0.8161045157567136, 0.0919477421216432, 0.008279579976001624],
        [0.0919477421216432, 0.0919477421216432, 0.008279579976001624],
        [0.04580491585986078, 0.7703723762146752, 0.006879808117471103],
        [0.7703723762146752, 0.04580491585986078, 0.006879808117471103],
        [0.183822707925464, 0.7703723762146752, 0.006879808117471103],
        [0.7703723762146752, 0.183822707925464, 0.006879808117471103],
        [0.183822707925464, 0.04580491585986078, 0.006879808117471103],
        [0.04580491585986078, 0.183822707925464, 0.006879808117471103],
        [0.20634925743383795, 0.6709539851942345, 0.011890955450076415],
        [0.6709539851942345, 0.20634925743383795, 0.011890955450076415],
        [0.12269675737192755, 0.6709539851942345, 0.011890955450076415],
        [0.6709539851942345, 0.12269675737192755, 0.011890955450076415],
        [0.12269675737192755, 0.20634925743383795, 0.011890955450076415],
        [0.20634925743383795, 0.12269675737192755, 0.011890955450076415],
        [0.0038976110334733825, 0.6004189546342569, 0.0022652672511285325],
        [0.6004189546342569, 0.0038976110334733825, 0.0022652672511285325],
        [0.3956834343322697, 0.6004189546342569, 0.0022652672511285325],
        [0.6004189546342569, 0.3956834343322697, 0.0022652672511285325],
        [0.3956834343322697, 0.0038976110334733825, 0.0022652672511285325],
        [0.0038976110334733825, 0.3956834343322697, 0.0022652672511285325],
        [0.013462016741444989, 0.8783421894675217, 0.003420055059803591],
        [0.8783421894675217, 0.013462016741444989, 0.003420055059803591],
        [0.10819579379103329, 0.8783421894675217, 0.003420055059803591],
        [0.8783421894675217, 0.10819579379103329, 0.003420055059803591],
        [0.10819579379103329, 0.013462016741444989, 0.003420055059803591],
        [0.013462016741444989, 0.10819579379103329, 0.003420055059803591],
        [0.040260283469908065, 0.6399880920047146, 0.008873744551010202],
        [0.6399880920047146, 0.040260283469908065, 0.008873744551010202],
        [0.31975162452537736, 0.6399880920047146, 0.008873744551010202],
        [0.6399880920047146, 0.31975162452537736, 0.008873744551010202],
        [0.31975162452537736, 0.040260283469908065, 0.008873744551010202],
        [0.040260283469908065, 0.31975162452537736, 0.008873744551010202],
        [0.005298335186609765, 0.7589294798551985, 0.002505330437289861],
        [0.7589294798551985, 0.005298335186609765, 0.002505330437289861],
        [0.23577218495819174, 0.7589294798551985, 0.002505330437289861],
        [0.7589294798551985, 0.23577218495819174, 0.002505330437289861],
        [0.23577218495819174, 0.005298335186609765, 0.002505330437289861],
        [0.005298335186609765, 0.23577218495819174, 0.002505330437289861],
        [0.000548360042042319, 0.9723607289627957, 0.0006114740634805449],
        [0.9723607289627957, 0.000548360042042319, 0.0006114740634805449],
        [0.027090910995162015, 0.9723607289627957, 0.0006114740634805449],
        [0.9723607289627957, 0.027090910995162015, 0.0006114740634805449],
        [0.027090910995162015, 0.000548360042042319, 0.0006114740634805449],
        [0.000548360042042319, 0.027090910995162015, 0.0006114740634805449],
        [0.12058769516392465, 0.5459187753861946, 0.01274108765591222],
        [0.5459187753861946, 0.12058769516392465, 0.01274108765591222],
        [0.33349352944988075, 0.5459187753861946, 0.01274108765591222],
        [0.5459187753861946, 0.33349352944988075, 0.01274108765591222],
        [0.33349352944988075, 0.12058769516392465, 0.01274108765591222],
        [0.12058769516392465, 0.33349352944988075, 0.01274108765591222],
    ]),
    (20, &[
        [0.3333333333333333, 0.3333333333333333, 0.013910110701453116],
        [0.2545792676733391, 0.4908414646533218, 0.014083201307520247],
        [0.4908414646533218, 0.2545792676733391, 0.014083201307520247],
        [0.2545792676733391, 0.2545792676733391, 0.014083201307520247],
        [0.010976141028397763, 0.9780477179432044, 0.0007988407910666199],
        [0.9780477179432044, 0.010976141028397763, 0.0007988407910666199],
        [0.010976141028397763, 0.010976141028397763, 0.0007988407910666199],
        [0.1093835967117146, 0.7812328065765708, 0.007830230776074533],
        [0.7812328065765708, 0.1093835967117146, 0.007830230776074533],
        [0.1093835967117146, 0.1093835967117146, 0.007830230776074533],
        [0.18629499774454095, 0.6274100045109181, 0.009173462974252915],
        [0.6274100045109181, 0.18629499774454095, 0.009173462974252915],
        [0.18629499774454095, 0.18629499774454095, 0.009173462974252915],
        [0.44555105695592484, 0.10889788608815038, 0.009452399933232448],
        [0.10889788608815038, 0.44555105695592484, 0.009452399933232448],
        [0.44555105695592484, 0.44555105695592484, 0.009452399933232448],
        [0.037310880598884696, 0.9253782388022306, 0.0021612754106655773],
        [0.9253782388022306, 0.037310880598884696, 0.0021612754106655773],
        [0.037310880598884696, 0.037310880598884696, 0.0021612754106655773],
        [0.39342534781709987, 0.2131493043658003, 0.013788050629070459],
        [0.2131493043658003, 0.39342534781709987, 0.013788050629070459],
        [0.39342534781709987, 0.39342534781709987, 0.013788050629070459],
        [0.476245611540499, 0.047508776919001974, 0.007101825303408441],
        [0.047508776919001974, 0.476245611540499, 0.007101825303408441],
        [0.476245611540499, 0.476245611540499, 0.007101825303408441],
        [0.0075707805046965285, 0.8332955118382362, 0.0022028974185584974],
        [0.8332955118382362, 0.0075707805046965285, 0.0022028974185584974],
        [0.15913370765706722, 0.8332955118382362, 0.0022028974185584974],
        [0.8332955118382362, 0.15913370765706722, 0.0022028974185584974],
        [0.15913370765706722, 0.0075707805046965285, 0.0022028974185584974],
        [0.0075707805046965285, 0.15913370765706722, 0.0022028974185584974],
        [0.04656036490766432, 0.7549215028635475, 0.00598639857895469],
        [0.7549215028635475, 0.04656036490766432, 0.00598639857895469],
        [0.19851813222878817, 0.7549215028635475, 0.00598639857895469],
        [0.7549215028635475, 0.19851813222878817, 0.00598639857895469],
        [0.19851813222878817, 0.04656036490766432, 0.00598639857895469],
        [0.04656036490766432, 0.19851813222878817, 0.00598639857895469],
        [0.06409058560843406, 0.9310544767839422, 0.0011298696021258656],
        [0.9310544767839422, 0.06409058560843406, 0.0011298696021258656],
        [0.0048549376076237535, 0.9310544767839422, 0.0011298696021258656],
        [0.9310544767839422, 0.0048549376076237535, 0.0011298696021258656],
        [0.0048549376076237535, 0.06409058560843406, 0.0011298696021258656],
        [0.06409058560843406, 0.0048549376076237535, 0.0011298696021258656],
        [0.05498747914298681, 0.6118777035474257, 0.008667225567219333],
        [0.6118777035474257, 0.05498747914298681, 0.008667225567219333],
        [0.3331348173095875, 0.6118777035474257, 0.008667225567219333],
        [0.6118777035474257, 0.3331348173095875, 0.008667225567219333],
        [0.3331348173095875, 0.05498747914298681, 0.008667225567219333],
        [0.05498747914298681, 0.3331348173095875, 0.008667225567219333],
        [0.09995229628813866, 0.8616840189364867, 0.004145711527613858],
        [0.8616840189364867, 0.09995229628813866, 0.004145711527613858],
        [0.03836368477537459, 0.8616840189364867, 0.004145711527613858],
        [0.8616840189364867, 0.03836368477537459, 0.004145711527613858],
        [0.03836368477537459, 0.09995229628813866, 0.004145711527613858],
        [0.09995229628813866, 0.03836368477537459, 0.004145711527613858],
        [0.10622720472027004, 0.6781657378896355, 0.00772260782209923],
        [0.6781657378896355, 0.10622720472027004, 0.00772260782209923],
        [0.2156070573900944, 0.6781657378896355, 0.00772260782209923],
        [0.6781657378896355, 0.2156070573900944, 0.00772260782209923],
        [0.2156070573900944, 0.10622720472027004, 0.00772260782209923],
        [0.10622720472027004, 0.2156070573900944, 0.00772260782209923],
        [0.42002375881622406, 0.5701446928909734, 0.003695681500255298],
        [0.5701446928909734, 0.42002375881622406, 0.003695681500255298],
        [0.00983154829280256, 0.5701446928909734, 0.003695681500255298],
        [0.5701446928909734, 0.00983154829280256, 0.003695681500255298],
        [0.00983154829280256, 0.42002375881622406, 0.003695681500255298],
        [0.42002375881622406, 0.00983154829280256, 0.003695681500255298],
        [0.317860123835772, 0.5423318041724281, 0.011691745731827737],
        [0.5423318041724281, 0.317860123835772, 0.011691745731827737],
        [0.1398080719917999, 0.5423318041724281, 0.011691745731827737],
        [0.5423318041724281, 0.1398080719917999, 0.011691745731827737],
        [0.1398080719917999, 0.317860123835772, 0.011691745731827737],
        [0.317860123835772, 0.1398080719917999, 0.011691745731827737],
        [0.010737212856011088, 0.7086813757203236, 0.003578200238457685],
        [0.7086813757203236, 0.010737212856011088, 0.003578200238457685],
        [0.2805814114236652, 0.7086813757203236, 0.003578200238457685],
        [0.7086813757203236, 0.2805814114236652, 0.003578200238457685],
        [0.2805814114236652, 0.010737212856011088, 0.003578200238457685],
        [0.010737212856011088, 0.2805814114236652, 0.003578200238457685],
    ]),
];
