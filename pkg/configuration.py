# Where the structure-constant and generator cache lives (TinyDB file inside cacheDir)
cacheDir = '.cliffhc-cache'
dbName = 'cache.json'

# console ### where to report failed assertions and usage errors
reportAlert = 'console'
loggingLevel = 'ERROR'
loggingFormat = '%(levelname)s %(name)s: %(message)s'

# Default run settings, overridden by the command line flags
defaultSuite = 'all'
defaultForm = 'trace'
defaultHbars = ['0', '1', '2', '1/2']

# D4 has a 2^28-dimensional exterior algebra. Only the symmetric side and the grading run for it.
enableD4 = False

# Exterior and Clifford checks are skipped for algebras of larger dimension (A3 has dimension 15)
exteriorMaxDim = 15

# Highest PBW degree used when sweeping the composition law
lemmaPbwDegree = 4

# Sampled sweeps for algebras where the full basis sweep is too large
randomSamples = 1000
randomSeed = 20240101

# Lemma sweeps run over every case up to these sizes and over a seeded sample beyond them
fullSweepBlades = 256
fullSweepLimit = 70000

# Worker threads used by the suites (None lets ThreadPoolExecutor decide)
workers = None
