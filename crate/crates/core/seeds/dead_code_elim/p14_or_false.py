def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def flag(x):
    if 0 or False:
        return 'on'
    return 'off' + str(x)
# probe: flag(1)
