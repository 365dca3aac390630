def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def can_login(user, password, locked):
    if user != '' and password == 'secret' and not locked:
        return 'welcome ' + user
    return 'denied'
