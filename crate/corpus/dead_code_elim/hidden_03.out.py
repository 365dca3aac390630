def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def flag(x):
    return 'off' + str(x)
