from enum import Enum, IntEnum


class FolderType(str, Enum):
    OUTPUTS = "outputs"
    REPORTS = "reports"


class SchemeKind(str, Enum):
    LIE = "lie"
    STRANG = "strang"


class BurgersMethod(str, Enum):
    CHARACTERISTICS = "characteristics"
    SPECTRAL_RK4 = "spectral-rk4"


class PresetName(str, Enum):
    VISCOUS_BURGERS = "viscous-burgers"
    KDV = "kdv"
    BENNEY_LIN = "benney-lin"
    KAWAHARA = "kawahara"


class Monitor(str, Enum):
    NORM_HR = "norm_hr"
    NORM_HQ = "norm_hq"
    NORM_HP = "norm_hp"
    LINF = "linf"


class ConvergenceColumn(str, Enum):
    """CSV header of a convergence table; order is part of the interface."""

    DT = "dt"
    ERR_HR = "err_hr"
    ERR_HQ = "err_hq"
    ERR_L2 = "err_l2"
    WALLCLOCK = "wallclock_s"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    XLSX = "xlsx"
    DAT = "dat"


class ExitCode(IntEnum):
    SUCCESS = 0
    CONFIG_ERROR = 1
    VALIDATION_FAILURE = 2
    GUARD_VIOLATION = 3
