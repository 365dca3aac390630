def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def category(age):
    if not age >= 18:
        return 'minor'
    elif age >= 65:
        return 'senior'
    else:
        return 'adult'
# probe: category(10)
# probe: category(70)
# probe: category(30)
