"""Printed reference values, transcribed digit for digit."""

# (alpha, epsilon) pairs for g = -0.5, four refinement blocks of ten.
ITERATION_BLOCKS = (
    (
        ("0.10", "0.7875843913490"),
        ("0.19", "0.6330068382654"),
        ("0.28", "0.4865632769097"),
        ("0.37", "0.3714877335918"),
        ("0.46", "0.2874437277571"),
        ("0.55", "0.2288130659022"),
        ("0.64", "0.1901599033527"),
        ("0.73", "0.1672807821995"),
        ("0.82", "0.1571204709131"),
        ("0.91", "0.1574914723433"),
    ),
    (
        ("0.855", "0.15611114689438"),
        ("0.856", "0.15610458365804"),
        ("0.857", "0.15609922993587"),
        ("0.858", "0.15609508353865"),
        ("0.859", "0.15609214228512"),
        ("0.860", "0.15609040400196"),
        ("0.861", "0.15608986652375"),
        ("0.862", "0.15609052769293"),
        ("0.863", "0.15609238535979"),
        ("0.864", "0.15609543738243"),
    ),
    (
        ("0.86075", "0.15608988843596"),
        ("0.86080", "0.15608987805867"),
        ("0.86085", "0.15608987067907"),
        ("0.86090", "0.15608986629690"),
        ("0.86095", "0.15608986491188"),
        ("0.86100", "0.15608986652375"),
        ("0.86105", "0.15608987113223"),
        ("0.86110", "0.15608987873706"),
        ("0.86115", "0.15608988933797"),
        ("0.86120", "0.15608990293470"),
    ),
    (
        ("0.86094750", "0.15608986490995"),
        ("0.86094763", "0.15608986490987"),
        ("0.86094776", "0.15608986490980"),
        ("0.86094789", "0.15608986490976"),
        ("0.86094802", "0.15608986490974"),
        ("0.86094815", "0.15608986490973"),
        ("0.86094828", "0.15608986490975"),
        ("0.86094841", "0.15608986490979"),
        ("0.86094854", "0.15608986490984"),
        ("0.86094867", "0.15608986490992"),
    ),
)

ALPHA_MIN_AT_MINUS_HALF = "0.860948"

# g: (alpha_min, nu_variational, nu_exact)
SUMMARY_ROWS = {
    -5.0: ("0.219050", "-12.989190", "-12.990313"),
    -3.0: ("0.362841", "-4.972539", "-4.972771"),
    -2.5: ("0.426004", "-3.586291", "-3.5865066"),
    -2.0: ("0.507489", "-2.442049", "-2.442360"),
    -1.5: ("0.609289", "-1.532213", "-1.532729"),
    -1.0: ("0.728909", "-0.841664", "-0.842418"),
    -0.5: ("0.860948", "-0.343910", "-0.344424"),
    0.1: ("1.023871", "0.054315", "0.054269"),
    0.25: ("1.047595", "0.128397", "0.128106"),
    0.5: ("1.068158", "0.234490", "0.233519"),
    1.0: ("1.077488", "0.394997", "0.392743"),
    1.5: ("1.072723", "0.506696", "0.503881"),
    2.0: ("1.065157", "0.586734", "0.583894"),
    2.5: ("1.057843", "0.645969", "0.643356"),
    3.0: ("1.051491", "0.691160", "0.688831"),
    5.0: ("1.034671", "0.797460", "0.796119"),
}


def last_place(text: str) -> float:
    """Unit in the last printed decimal place."""
    return 10.0 ** -len(text.split(".")[1])
