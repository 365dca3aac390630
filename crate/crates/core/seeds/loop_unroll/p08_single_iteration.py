def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def once(values):
    for k in range(1):
        values.append(k)
    return values
# probe: once([9])
