def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def can_login(user, password, locked):
    if user != '':
        if password == 'secret':
            if not locked:
                return 'welcome ' + user
    return 'denied'
# probe: can_login('ann', 'secret', False)
# probe: can_login('ann', 'secret', True)
# probe: can_login('', 'secret', False)
