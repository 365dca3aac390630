def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def allowed(age, member, banned):
    return age >= 18 or not (banned and not member)
# probe: allowed(20, False, True)
# probe: allowed(10, False, True)
# probe: allowed(10, True, True)
