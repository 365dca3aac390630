def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def should_sleep(tired, has_work, weekend):
    rest = not (has_work and not weekend)
    if tired and rest:
        return 'sleep'
    return 'stay up'
# probe: should_sleep(True, True, False)
# probe: should_sleep(True, True, True)
# probe: should_sleep(False, False, False)
