// général notes — über config 中文
public class GammaNotes {
    private String banner = "a very long unique banner string value 9471";
    private String mode = "default";
}
