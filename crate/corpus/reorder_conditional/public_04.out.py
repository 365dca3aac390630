def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def truthy(x):
    if x:
        return 'yes'
    else:
        return 'no'
