def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def truthy(x):
    if not not x:
        return 'yes'
    else:
        return 'no'
# probe: truthy(1)
# probe: truthy(0)
# probe: truthy('')
