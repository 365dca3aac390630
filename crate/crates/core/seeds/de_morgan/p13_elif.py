def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def triage(temp, pulse):
    if temp > 39:
        return 'urgent'
    elif not (60 <= pulse and pulse <= 100):
        return 'check pulse'
    return 'fine'
# probe: triage(40, 80)
# probe: triage(37, 120)
# probe: triage(37, 70)
