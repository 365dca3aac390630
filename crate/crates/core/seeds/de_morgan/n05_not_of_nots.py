def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def none_set(a, b):
    return not a and not b
# probe: none_set(False, False)
# probe: none_set(True, False)
