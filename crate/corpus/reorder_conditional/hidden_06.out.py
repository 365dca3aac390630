def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def category(age):
    if age >= 18:
        if age >= 65:
            return 'senior'
        else:
            return 'adult'
    else:
        return 'minor'
